#include "navbench/plugin_bridge.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>
#include <thread>

#include "navbench/wire.hpp"

namespace navbench {

namespace {

void ignore_sigpipe_once() {
    static std::once_flag flag;
    std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

PluginPlanner::PluginPlanner(std::vector<std::string> command, const RobotModel& model,
                             double control_dt, double deadline_s)
    : command_(std::move(command)), model_(model), control_dt_(control_dt),
      deadline_s_(deadline_s) {}

PluginPlanner::~PluginPlanner() { terminate_child(); }

void PluginPlanner::spawn() {
    ignore_sigpipe_once();
    int in_pipe[2], out_pipe[2];  // in: harness->plugin, out: plugin->harness
    if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0)
        throw PlannerError("plugin: pipe() failed");
    const int pid = ::fork();
    if (pid < 0) throw PlannerError("plugin: fork() failed");
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        std::vector<char*> argv;
        argv.reserve(command_.size() + 1);
        for (std::string& arg : command_) argv.push_back(arg.data());
        argv.push_back(nullptr);
        ::execvp(argv[0], argv.data());
        ::_exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    child_pid_ = pid;
    running_ = true;
}

void PluginPlanner::init(const nlohmann::json& config) {
    spawn();
    send_line(wire_init(config, model_, control_dt_, 0.3).dump());
    std::string line;
    // Startup gets a generous deadline; per-tick replies do not.
    if (!read_line(5.0, line)) throw PlannerError("plugin: no ready message within 5 s");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw PlannerError("plugin: malformed handshake line");
    }
    if (j.value("type", "") != "ready")
        throw PlannerError("plugin: expected ready, got '" + line + "'");
}

PlannerCommand PluginPlanner::compute(const Observation& obs) {
    if (!running_) throw PlannerError("plugin: compute() before init or after shutdown");
    send_line(wire_obs(obs).dump());
    const double deadline_at = now_s() + deadline_s_;

    std::string line;
    // Discard replies owed from previously timed-out ticks first.
    while (pending_stale_ > 0) {
        if (!read_line(deadline_at - now_s(), line)) {
            ++pending_stale_;  // this tick's reply is now owed too
            ++timeout_ticks_;
            log_event("timeout_tick");
            return {Twist{0.0, 0.0}};
        }
        --pending_stale_;
    }
    if (!read_line(deadline_at - now_s(), line)) {
        ++pending_stale_;
        ++timeout_ticks_;
        log_event("timeout_tick");
        return {Twist{0.0, 0.0}};
    }

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw PlannerError("plugin: malformed line: " + line.substr(0, 120));
    }
    return {wire_parse_cmd(j)};
}

void PluginPlanner::shutdown() {
    if (!running_) return;
    try {
        send_line(R"({"type":"shutdown"})");
    } catch (const PlannerError&) {
        // Child already gone; cleanup below.
    }
    terminate_child();
}

void PluginPlanner::send_line(const std::string& line) {
    std::string framed = line;
    framed += '\n';
    std::size_t off = 0;
    while (off < framed.size()) {
        const ssize_t n = ::write(to_child_, framed.data() + off, framed.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw PlannerError("plugin: write failed (process gone?)");
        }
        off += static_cast<std::size_t>(n);
    }
}

bool PluginPlanner::read_line(double deadline_s, std::string& out) {
    double remaining = deadline_s;
    while (true) {
        const std::size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            out = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            return true;
        }
        if (remaining <= 0.0) return false;
        struct pollfd pfd{from_child_, POLLIN, 0};
        const double t0 = now_s();
        const int pr = ::poll(&pfd, 1, static_cast<int>(remaining * 1000.0) + 1);
        remaining -= now_s() - t0;
        if (pr < 0) {
            if (errno == EINTR) continue;
            throw PlannerError("plugin: poll failed");
        }
        if (pr == 0) return false;
        char chunk[4096];
        const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
        if (n < 0) {
            if (errno == EINTR) continue;
            throw PlannerError("plugin: read failed");
        }
        if (n == 0) throw PlannerError("plugin: process closed its output");
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

void PluginPlanner::terminate_child() {
    if (child_pid_ < 0) return;
    if (to_child_ >= 0) ::close(to_child_);
    to_child_ = -1;
    int status = 0;
    for (int i = 0; i < 200; ++i) {  // up to ~2 s of graceful exit
        const int r = ::waitpid(child_pid_, &status, WNOHANG);
        if (r == child_pid_ || r < 0) {
            child_pid_ = -1;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (child_pid_ >= 0) {
        ::kill(child_pid_, SIGKILL);
        ::waitpid(child_pid_, &status, 0);
        child_pid_ = -1;
    }
    if (from_child_ >= 0) ::close(from_child_);
    from_child_ = -1;
    running_ = false;
}

}  // namespace navbench

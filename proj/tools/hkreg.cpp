#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hk/cache.hpp"
#include "hk/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hk::InputError("cannot open task file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_error(const std::string& format, const std::string& type, const std::string& message) {
    if (format == "table") {
        std::cout << "error (" << type << "): " << message << "\n";
        return;
    }
    nlohmann::ordered_json body;
    body["error"] = nlohmann::ordered_json{{"type", type}, {"message", message}};
    std::cout << body.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hkreg: exact Hilbert-Kunz and Frobenius-Tor invariants of graded rings"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "evaluate a task file");
    std::string file;
    std::string format = "json";
    std::string cache_dir;
    int max_n = 0;
    double tol = 0;
    double timeout = 0;
    bool no_cache = false;
    run->add_option("file", file, "task file path")->required();
    run->add_option("--max-n", max_n, "override the Frobenius iterate count")
        ->check(CLI::PositiveNumber);
    run->add_option("--tol", tol, "override the check tolerance")->check(CLI::NonNegativeNumber);
    run->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    run->add_option("--cache", cache_dir, "Groebner cache directory");
    run->add_flag("--no-cache", no_cache, "disable the Groebner cache");
    run->add_option("--timeout", timeout, "compute budget in seconds")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        hk::TaskSpec spec = hk::parse_taskfile(read_file(file));
        if (run->count("--max-n")) spec.n_max = max_n;
        if (run->count("--tol")) spec.tol = tol;

        if (!no_cache) {
            std::string dir = cache_dir;
            if (dir.empty()) {
                const char* env = std::getenv("HKREG_CACHE_DIR");
                if (env) dir = env;
            }
            if (!dir.empty()) hk::set_gb_cache(std::make_shared<hk::GbCache>(dir));
        }
        if (timeout > 0) {
            auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(timeout));
            hk::set_compute_deadline(std::chrono::steady_clock::now() + budget);
        }

        hk::ResultDocument doc = hk::run_task(spec);
        std::cout << hk::emit(doc, format);
        return 0;
    } catch (const hk::InputError& e) {
        emit_error(format, "input", e.what());
        return 2;
    } catch (const hk::TimeoutError& e) {
        emit_error(format, "timeout", e.what());
        return 3;
    } catch (const hk::MathError& e) {
        emit_error(format, "math", e.what());
        return 4;
    } catch (const hk::Error& e) {
        emit_error(format, "internal", e.what());
        return 4;
    } catch (const std::exception& e) {
        emit_error(format, "internal", e.what());
        return 1;
    }
}

// Experiment suite runner. Writes one results file per suite when --out-dir
// is given; always prints the table. Exit 0 on success, 2 on input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cfc/bench.hpp"
#include "cfc/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"experiment suites for the conflict-free coloring toolkit"};
    std::string suite, out_dir;
    uint64_t seed = 1;
    bool with_times = false;
    app.add_option("--suite", suite, "lkn|inequality|mt-scaled")->required();
    app.add_option("--seed", seed, "RNG seed (default 1)");
    app.add_option("--out-dir", out_dir, "directory for the results file");
    app.add_flag("--with-times", with_times,
                 "append wall-time columns (informational; breaks byte stability)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string table = cfc::bench::run_suite(suite, seed, with_times);
        std::cout << table;
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::string path = out_dir + "/" + suite + ".txt";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw cfc::input_error("cannot write '" + path + "'");
            out << table;
            std::cerr << "wrote " << path << '\n';
        }
        return 0;
    } catch (const cfc::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

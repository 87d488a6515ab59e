// Writes one graph6 file per vertex count, one line per isomorphism class.
#include "cospec/enumerate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Enumerate graphs up to isomorphism"};
    std::size_t n_max = 7;
    std::string out_dir = "data/corpus";
    bool connected_only = false;
    app.add_option("--n-max", n_max, "Largest vertex count")->check(CLI::Range(1, 9));
    app.add_option("--out-dir", out_dir, "Output directory");
    app.add_flag("--connected", connected_only, "Keep connected graphs only");
    CLI11_PARSE(app, argc, argv);

    std::filesystem::create_directories(out_dir);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto graphs = cospec::all_graphs(n);
        const std::string stem = connected_only ? "connected" : "graphs";
        const auto path = std::filesystem::path(out_dir) / (stem + std::to_string(n) + ".g6");
        std::ofstream out(path);
        std::size_t written = 0;
        for (const auto& g : graphs) {
            if (connected_only && !cospec::is_connected(g))
                continue;
            out << cospec::write_graph6(g) << '\n';
            ++written;
        }
        std::cout << path.string() << ": " << written << " graphs\n";
    }
    return 0;
}

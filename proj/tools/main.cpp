#include "hfgrowth/cli.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hfg::CommandResult r = hfg::run(args, std::cin);
    if (r.data) {
        if (r.data_path.empty()) {
            std::cout << *r.data;
            std::cerr << r.rendered();
            return hfg::exit_code(r.status);
        }
        std::ofstream f(r.data_path);
        if (!f || !(f << *r.data)) {
            std::cerr << "error: cannot write '" << r.data_path << "'\n";
            return hfg::exit_code(hfg::Status::error);
        }
    }
    (r.status == hfg::Status::ok || r.status == hfg::Status::alarm ? std::cout : std::cerr) << r.rendered();
    return hfg::exit_code(r.status);
}

#include <iostream>

#include <perfectntt/cli.hpp>

int main(int argc, char** argv) {
    perfectntt::cli::CliConfig cfg;
    if (auto code = perfectntt::cli::parse(argc, argv, cfg, std::cout, std::cerr)) return *code;
    return perfectntt::cli::run(cfg, std::cout, std::cerr);
}

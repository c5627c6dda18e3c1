#include <iostream>
#include <string>
#include <vector>

#include <qtrans/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return qtrans::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "qtrans: internal error: " << e.what() << '\n';
        return qtrans::cli::internal;
    }
}

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"recollement verification engine for bound quiver algebras"};
    std::string spec_path, out_path;
    app.add_option("--spec", spec_path, "job spec file")->required();
    app.add_option("--out", out_path, "report output path (default: stdout)");
    CLI11_PARSE(app, argc, argv);
    std::cerr << "not yet implemented\n";
    return 1;
}

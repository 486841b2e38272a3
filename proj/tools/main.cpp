#include "newtonforge/cli.hpp"

int main(int argc, char** argv) {
    return newtonforge::cli_run(argc, argv);
}

#include "cli_app.hpp"

int main(int argc, char** argv)
{
    return mixedcolor::cli::run_cli(argc, argv);
}

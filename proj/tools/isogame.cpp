#include "isogame/cli.hpp"

int main(int argc, char** argv)
{
    return isogame::cli::main_entry(argc, argv);
}

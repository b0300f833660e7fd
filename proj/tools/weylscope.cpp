#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return weylscope::run(argc, argv, std::cout, std::cerr); }

// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "emobee/cli.hpp"

int main(int argc, char** argv) { return emobee::cli_main(argc, argv, std::cout, std::cerr); }

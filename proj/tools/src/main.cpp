// SPDX-License-Identifier: Apache-2.0

#include "cellfree_tools/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cellfree::tools::run_cli(argc, argv, std::cout, std::cerr); }

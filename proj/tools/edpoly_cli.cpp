// Copyright 2026 The edpoly Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "edpoly/cli.hpp"

int main(int argc, char** argv) { return edpoly::cli::run(argc, argv, std::cout, std::cerr); }

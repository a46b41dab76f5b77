#include "catlab/acceptance.hpp"

#include <iostream>

int main() {
    bool ok = catlab::run_acceptance(std::cout);
    return ok ? 0 : 1;
}

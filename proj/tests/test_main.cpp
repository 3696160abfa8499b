#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "beatty/bigfloat.hpp"

int main(int argc, char** argv) {
    beatty::set_working_precision(50);
    return doctest::Context(argc, argv).run();
}

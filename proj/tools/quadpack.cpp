/* Apache License, Version 2.0 */
#include "quadpack/geom.hpp"
int main() { return 0; }

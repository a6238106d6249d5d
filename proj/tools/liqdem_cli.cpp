#include "liqdem/liqdem.hpp"
int main() { return 0; }

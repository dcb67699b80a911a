#include "eigencones/oracle.hpp"
int main() { return 0; }

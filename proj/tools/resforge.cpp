#include "resforge/complex.hpp"
int main(){ return 0; }

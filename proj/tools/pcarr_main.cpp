#include <cstdio>
int main() { std::puts("pcarr: placeholder"); return 0; }

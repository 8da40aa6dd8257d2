// placeholder; full CLI arrives with the io module
#include <cstdio>
int main() { std::puts("ogw: work in progress"); return 2; }

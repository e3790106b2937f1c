#include "romsched.h"
#include <cstdio>
int main() { std::printf("%s\n", rms_version()); return 0; }

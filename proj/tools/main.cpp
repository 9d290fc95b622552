#include "ramsey/graph.hpp"
int main(){return 0;}

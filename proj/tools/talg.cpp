#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::cerr << "talg: CLI not wired up yet\n";
    return 2;
}

#include <cstdio>
#include <string>
#include <vector>

#include "drinfeld/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string format = "text";
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--format") format = args[i + 1];
    drinfeld::RunReport rep = drinfeld::run_command(args);
    std::fputs(drinfeld::emit(rep, format).c_str(), stdout);
    std::fprintf(stderr, "(%s in %ld ms, seed %u)\n", rep.success ? "ok" : rep.error_code.c_str(),
                 rep.timing_ms, rep.seed);
    return rep.exit_code;
}

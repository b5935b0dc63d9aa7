// Exit-status contract of the command-line driver: 0 success/PASS,
// 1 verification FAIL, 2 invalid configuration or usage.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

int runStatus(const std::string& cmd) {
    int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    if (raw == -1)
        return -1;
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void expect(const std::string& cmd, int want) {
    int got = runStatus(cmd);
    bool ok = got == want;
    std::printf("%s  exit %d (want %d)  %s\n", ok ? "ok  " : "FAIL", got, want, cmd.c_str());
    if (!ok)
        ++failures;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: cli_contract <path-to-cli>\n");
        return 2;
    }
    std::string cli = argv[1];

    expect(cli + " verify-presentation --p 2 --n 2 --adic-prec 3 --tmax 10", 0);
    expect(cli + " homology --p 2 --n 1 --adic-prec 1 --tmax 4", 0);
    expect(cli + " splitting --p 3 --n 2 --tmax 20", 0);

    // validation: out-of-range height, composite prime, odd window, bad precision
    expect(cli + " homology --p 7 --n 0", 2);
    expect(cli + " homology --p 4 --n 2", 2);
    expect(cli + " homology --p 2 --n 2 --tmax 7", 2);
    expect(cli + " homology --p 2 --n 2 --adic-prec 0", 2);
    expect(cli + " homology --p 2 --n 6", 2);

    // usage: unknown command, missing required option, bad word pairs
    expect(cli + " frobnicate", 2);
    expect(cli + " massey --p 2 --n 4 --I 1,2", 2);
    expect(cli + " massey --p 2 --n 4 --I 1 --J 3,4", 2);
    expect(cli + " massey --p 2 --n 2 --I 1,2 --J 1,2", 2);
    expect(cli + " massey --p 2 --n 4 --I 1,2 --J 9,10", 2);
    expect(cli + " extensions --p 2 --n 4 --degree 44", 2);
    expect(cli + " verify-presentation --p 2 --n 2 --format tsv", 2);

    if (failures) {
        std::printf("cli contract: %d failure(s)\n", failures);
        return 1;
    }
    std::printf("cli contract: all checks passed\n");
    return 0;
}

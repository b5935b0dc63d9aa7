// Command-line driver: every verification and table as a reproducible batch
// run with machine-readable output.  Identical configurations produce
// byte-identical artifacts.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kzl/json_io.hpp"

namespace {

struct CommonOpts {
    uint32_t p = 2;
    int n = 2;
    int adicPrec = 4;
    int64_t tMax = -1;
    std::string format = "json";
    std::string output;
    bool noPbar = false;
    uint64_t seed = 0;
};

void addCommon(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "prime characteristic");
    cmd->add_option("--n", o.n, "height (1..5)");
    cmd->add_option("--adic-prec", o.adicPrec, "adic precision N >= 1");
    cmd->add_option("--tmax", o.tMax, "even internal-degree bound (default derived from p, n)");
    cmd->add_option("--format", o.format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--output", o.output, "output path (default stdout)");
    cmd->add_flag("--no-pbar", o.noPbar, "exclude the (1,0) exterior class from page assembly");
    cmd->add_option("--seed", o.seed, "seed recorded in the artifact");
}

kzl::Params makeParams(const CommonOpts& o) {
    return kzl::Params::make(o.p, o.n, o.adicPrec, o.tMax);
}

int emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
        return 0;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output path: " << o.output << "\n";
        return 2;
    }
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << "\n";
    return 0;
}

std::vector<int> parseIndexList(const std::string& raw) {
    std::vector<int> out;
    std::string cur;
    for (char ch : raw + ",") {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Koszul-homology and spectral-page verification engine"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string masseyI, masseyJ;
    int64_t extDegree = 0;
    int extBelow = 1;

    CLI::App* cmdHomology = app.add_subcommand("homology", "bigraded homology table");
    CLI::App* cmdVerify =
        app.add_subcommand("verify-presentation", "check the presented algebra against homology");
    CLI::App* cmdMassey = app.add_subcommand("massey", "triple bracket report for f-words");
    CLI::App* cmdE2 = app.add_subcommand("e2", "page-2 chart");
    CLI::App* cmdCollapse = app.add_subcommand("collapse", "permanence report for all generators");
    CLI::App* cmdExt = app.add_subcommand("extensions", "candidate scan below a filtration");
    CLI::App* cmdSplit = app.add_subcommand("splitting", "series consistency of the ring splitting");
    for (CLI::App* c :
         {cmdHomology, cmdVerify, cmdMassey, cmdE2, cmdCollapse, cmdExt, cmdSplit})
        addCommon(c, o);
    cmdMassey->add_option("--I", masseyI, "first word, comma separated, e.g. 1,2")->required();
    cmdMassey->add_option("--J", masseyJ, "second word, comma separated, e.g. 3,4")->required();
    cmdExt->add_option("--degree", extDegree, "total degree to scan")->required();
    cmdExt->add_option("--below", extBelow, "strict filtration bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        kzl::Params P = makeParams(o);
        bool includePbar = !o.noPbar;
        auto withConfig = [&](const char* command, kzl::json body) {
            body["config"] = kzl::configJson(P, command, includePbar, o.seed);
            return body.dump(2);
        };

        if (cmdHomology->parsed()) {
            kzl::BigradedTable T = kzl::homologyTable(P);
            if (o.format == "tsv")
                return emit(o, kzl::toTsv(T));
            return emit(o, withConfig("homology", kzl::toJson(T)));
        }
        if (cmdVerify->parsed()) {
            if (o.format == "tsv")
                throw kzl::Error(kzl::Errc::InvalidConfig, "verify-presentation is json only");
            kzl::PresentationReport R = kzl::verifyPresentation(P);
            int rc = emit(o, withConfig("verify-presentation", kzl::toJson(R)));
            return rc != 0 ? rc : (R.pass ? 0 : 1);
        }
        if (cmdMassey->parsed()) {
            if (o.format == "tsv")
                throw kzl::Error(kzl::Errc::InvalidConfig, "massey is json only");
            kzl::Subset I = 0, J = 0;
            for (int i : parseIndexList(masseyI)) {
                if (i < 1 || i > P.n)
                    throw kzl::Error(kzl::Errc::InvalidConfig, "index out of range in --I");
                I |= 1u << (i - 1);
            }
            for (int j : parseIndexList(masseyJ)) {
                if (j < 1 || j > P.n)
                    throw kzl::Error(kzl::Errc::InvalidConfig, "index out of range in --J");
                J |= 1u << (j - 1);
            }
            kzl::BracketReport R = kzl::bracketVerify(I, J, P);
            int rc = emit(o, withConfig("massey", kzl::toJson(R, P)));
            return rc != 0 ? rc : (R.pass ? 0 : 1);
        }
        if (cmdE2->parsed()) {
            kzl::PageTable T = kzl::e2Table(P, includePbar);
            if (o.format == "tsv")
                return emit(o, kzl::toTsv(T));
            return emit(o, withConfig("e2", kzl::toJson(T)));
        }
        if (cmdCollapse->parsed()) {
            if (o.format == "tsv")
                throw kzl::Error(kzl::Errc::InvalidConfig, "collapse is json only");
            kzl::CollapseReport R = kzl::collapseReport(P, includePbar);
            int rc = emit(o, withConfig("collapse", kzl::toJson(R)));
            return rc != 0 ? rc : (R.pass ? 0 : 1);
        }
        if (cmdExt->parsed()) {
            if (o.format == "tsv")
                throw kzl::Error(kzl::Errc::InvalidConfig, "extensions is json only");
            if (extBelow < 0)
                throw kzl::Error(kzl::Errc::InvalidConfig, "--below must be >= 0");
            auto cands = kzl::extensionSearch(P, extDegree, extBelow);
            kzl::json body{{"degree", extDegree},
                           {"below", extBelow},
                           {"candidates", kzl::toJson(cands)}};
            return emit(o, withConfig("extensions", std::move(body)));
        }
        if (cmdSplit->parsed()) {
            if (o.format == "tsv")
                throw kzl::Error(kzl::Errc::InvalidConfig, "splitting is json only");
            kzl::SplittingReport R = kzl::splittingConsistency(P, P.tMax);
            int rc = emit(o, withConfig("splitting", kzl::toJson(R)));
            return rc != 0 ? rc : (R.pass ? 0 : 1);
        }
        return 2;
    } catch (const kzl::Error& e) {
        std::cerr << e.what() << "\n";
        bool usage = e.code == kzl::Errc::InvalidConfig || e.code == kzl::Errc::BadIndexPair;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

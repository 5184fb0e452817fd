#include "algcomb/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void report(const algcomb::verify::Outcome& o)
{
    std::cout << algcomb::verify::summary_line(o) << "\n";
    for (const auto& f : o.failures)
        std::cout << "  failed: " << f << "\n";
    for (const auto& n : o.notes)
        std::cout << "  note: " << n << "\n";
}

}

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int criterion = 0;
    bool all = false;
    algcomb::verify::Options opt;
    auto* one = app.add_option("--criterion", criterion, "criterion number")->check(CLI::Range(1, 10));
    app.add_flag("--all", all, "run every criterion")->excludes(one);
    app.add_option("--max-size", opt.max_size, "size bound for exhaustive suites")->check(CLI::Range(1, 6));
    CLI11_PARSE(app, argc, argv);

    std::vector<algcomb::verify::Outcome> results;
    if (criterion)
        results.push_back(algcomb::verify::run_criterion(criterion, opt));
    else
        results = algcomb::verify::run_all(opt);

    int failed = 0;
    for (const auto& o : results) {
        report(o);
        failed += !o.pass;
    }
    if (results.size() > 1)
        std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed ? 1 : 0;
}

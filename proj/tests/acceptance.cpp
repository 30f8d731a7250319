// Acceptance run: one line per criterion. A criterion whose only non-passing
// checks are recorded errata is reported as FAIL (documented) and does not
// change the exit status; anything else failing does.
#include <hurwitz/suites.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace hurwitz;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> sections;
    double limit;  // seconds
};

struct Outcome {
    bool pass = false, documented = false;
    std::string detail;
};

Outcome judge(const Criterion& c, const Report& rep, const std::map<std::string, double>& secs)
{
    Outcome o;
    int checks = 0;
    double t = 0;
    std::vector<std::string> failed, errata;
    for (const auto& name : c.sections) {
        bool found = false;
        for (const auto& s : rep.sections) {
            if (s.name != name) continue;
            found = true;
            t += secs.at(name);
            for (const auto& k : s.checks) {
                ++checks;
                if (k.status == Status::Fail) failed.push_back(k.id);
                else if (k.status == Status::Erratum) errata.push_back(k.id);
            }
        }
        if (!found) failed.push_back("missing section " + name);
    }
    bool in_time = t < c.limit;
    if (!in_time) failed.push_back("runtime " + std::to_string(t) + " s over " + std::to_string(c.limit) + " s");
    if (checks == 0) failed.push_back("no checks ran");
    o.pass = failed.empty() && errata.empty();
    o.documented = failed.empty() && !errata.empty();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d checks, %.1f s", checks, t);
    o.detail = buf;
    if (!failed.empty()) o.detail += "; failed: " + detail::join(failed);
    if (!errata.empty()) o.detail += "; recorded errata: " + detail::join(errata);
    return o;
}

} // namespace

int main()
{
    std::map<std::string, double> secs;
    auto sink = [&](const Section& s) {
        secs[s.name] += s.seconds;
        std::fprintf(stderr, "  %s: %zu checks, %.1f s\n", s.name.c_str(), s.checks.size(), s.seconds);
    };

    RunConfig one;
    one.threads = 1;
    Report paper = verify_suite("paper", one, sink);
    Report engine = verify_suite("engine", one, sink);
    Report all = paper;
    for (auto& s : engine.sections) all.sections.push_back(s);

    const std::vector<Criterion> criteria{
        {1, "degree-3 fundamental relation", {"deg3.relations", "deg3.relations.g2"}, 10},
        {2, "degree-3 Chow rings for g = 2..8", {"deg3.dims", "deg3.chow"}, 60},
        {3, "degree-4 ideal and graded dimensions", {"deg4.ideal"}, 180},
        {4, "degree-4 presentation", {"deg4.presentation"}, 180},
        {5, "degree-4 classes and spanning determinants", {"deg4.classes"}, 180},
        {6, "degree-5 non-injectivity ideal", {"deg5.ni"}, 1800},
        {7, "degree-5 singular ideal and presentation", {"deg5.ideal", "deg5.presentation"}, 1800},
        {8, "degree-5 classes", {"deg5.classes"}, 1800},
        {9, "engine property suites", {"engine.schur", "engine.grassmann", "engine.projection", "engine.grr"}, 60},
    };

    int undocumented = 0;
    auto line = [&](int n, const std::string& title, const Outcome& o) {
        const char* tag = o.pass ? "PASS" : o.documented ? "FAIL (documented)" : "FAIL";
        std::printf("criterion %2d  %-18s %s  [%s]\n", n, tag, title.c_str(), o.detail.c_str());
        if (!o.pass && !o.documented) ++undocumented;
    };
    for (const auto& c : criteria) line(c.number, c.title, judge(c, all, secs));

    // Determinism: the same suite with a different thread count.
    RunConfig two;
    two.threads = 2;
    detail::Stopwatch sw;
    Report again = verify_suite("paper", two);
    Outcome det;
    det.pass = again.dump() == paper.dump();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu bytes, threads 1 vs 2, %.1f s", paper.dump().size(), sw.seconds());
    det.detail = buf;
    if (!det.pass) det.detail += "; reports differ";
    line(10, "deterministic reports", det);

    std::printf("%d of 10 criteria with undocumented failures\n", undocumented);
    return undocumented ? 1 : 0;
}

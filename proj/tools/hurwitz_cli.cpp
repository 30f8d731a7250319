#include <hurwitz/suites.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using namespace hurwitz;

namespace {

struct Options {
    int degree = 4;
    std::string genus = "symbolic";
    int cut = 0;
    int max_codim = 0;
    std::string format = "json";
    bool deep = false;
    int threads = 1;
    std::string suite = "paper";
    bool quiet = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunConfig config_of(const Options& o)
{
    RunConfig c;
    if (o.genus != "symbolic") {
        try {
            std::size_t pos = 0;
            long g = std::stol(o.genus, &pos);
            if (pos != o.genus.size()) throw std::invalid_argument(o.genus);
            c.genus = g;
        } catch (const std::exception&) {
            throw UsageError("--genus must be an integer or 'symbolic'");
        }
        if (*c.genus < 2) throw UsageError("--genus must be at least 2");
    }
    c.cut = o.cut;
    c.max_codim = o.max_codim;
    c.threads = o.threads;
    c.deep = o.deep;
    if (o.cut < 0 || o.max_codim < 0) throw UsageError("--cut and --max-codim must be positive");
    if (o.cut) {
        int minimum = o.degree == 3 ? 3 : 6;
        if (o.cut < minimum)
            throw UsageError("degree " + std::to_string(o.degree) + " needs --cut at least " + std::to_string(minimum));
    }
    if (o.deep && o.degree != 5) throw UsageError("--deep applies to degree 5 only");
    return c;
}

int emit(const Report& r, const Options& o)
{
    std::cout << (o.format == "md" ? r.to_markdown() : r.dump());
    int failed = 0;
    for (const auto& s : r.sections)
        for (const auto& c : s.checks)
            if (c.status == Status::Fail) {
                std::cerr << "mismatch: " << c.id << "\n  expected: " << c.expected << "\n  computed: " << c.computed
                          << "\n";
                ++failed;
            } else if (c.status == Status::Erratum && !o.quiet) {
                std::cerr << "documented discrepancy: " << c.id << " (" << c.note << ")\n";
            }
    return failed ? 1 : 0;
}

Report run_relations(const Options& o, const RunConfig& c)
{
    Report r;
    r.command = "relations --degree " + std::to_string(o.degree);
    if (o.degree == 3) r.sections.push_back(deg3_relations(c));
    else if (o.degree == 4) r.sections.push_back(deg4_relations(deg4_run(c)));
    else r.sections.push_back(deg5_relations(deg5_run(c, false)));
    return r;
}

Report run_dims(const Options& o, const RunConfig& c)
{
    Report r;
    r.command = "dims --degree " + std::to_string(o.degree);
    if (o.degree == 3) {
        r.sections.push_back(deg3_dims(c));
    } else if (o.degree == 4) {
        auto run = deg4_run(c);
        auto s = deg4_ideal_section(run);
        s.data.erase("generators");
        s.name = "deg4.dims";
        r.sections.push_back(std::move(s));
    } else {
        RunConfig cc = c;
        if (c.max_codim && !c.cut) cc.cut = std::max(deg5_default_cut(c), c.max_codim);
        auto run = deg5_run(cc, false);
        auto s = deg5_ideal_section(run);
        s.name = "deg5.dims";
        r.sections.push_back(std::move(s));
    }
    return r;
}

Report run_classes(const Options& o, const RunConfig& c)
{
    Report r;
    r.command = "classes --degree " + std::to_string(o.degree);
    if (o.degree == 4) r.sections.push_back(deg4_classes_section(deg4_run(c)));
    else r.sections.push_back(deg5_classes_section(deg5_run(c, false)));
    return r;
}

Report run_chow3(const RunConfig& c)
{
    Report r;
    r.command = "chow3 --genus " + std::to_string(*c.genus);
    auto s = deg3_chow_section({*c.genus}, c.threads);
    auto row = s.data["rings"][0];
    s.data = row;
    r.sections.push_back(std::move(s));
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chow rings of Hurwitz spaces of degree 3, 4 and 5"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_degree) {
        if (with_degree)
            sub->add_option("--degree", o.degree, "cover degree")->check(CLI::IsMember({3, 4, 5}));
        sub->add_option("--genus", o.genus, "integer genus >= 2, or 'symbolic'");
        sub->add_option("--cut", o.cut, "base truncation degree");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "md"}));
        sub->add_flag("--deep", o.deep, "degree 5: larger cut for the stable range");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
    };
    auto* relations = app.add_subcommand("relations", "ideal generators");
    common(relations, true);
    auto* dims = app.add_subcommand("dims", "graded dimensions of the quotient");
    common(dims, true);
    dims->add_option("--max-codim", o.max_codim, "highest codimension");
    auto* classes = app.add_subcommand("classes", "class table with reductions and spanning determinants");
    common(classes, true);
    auto* chow3 = app.add_subcommand("chow3", "Chow ring of the trigonal locus at a fixed genus");
    common(chow3, false);
    auto* verify = app.add_subcommand("verify", "compare against the reference data");
    common(verify, false);
    verify->add_option("--suite", o.suite, "deg3, deg4, deg5, engine, paper or all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_flag("--quiet", o.quiet, "do not list documented discrepancies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (chow3->parsed() && o.genus == "symbolic") throw UsageError("chow3 needs an integer --genus");
        if (classes->parsed() && o.degree == 3) throw UsageError("classes is available for degrees 4 and 5");
        if (verify->parsed()) o.degree = 5;  // only --deep validation depends on it
        auto c = config_of(o);
        if (verify->parsed() && c.genus) throw UsageError("verify runs over symbolic genus");
        Report r;
        if (relations->parsed()) r = run_relations(o, c);
        else if (dims->parsed()) r = run_dims(o, c);
        else if (classes->parsed()) r = run_classes(o, c);
        else if (chow3->parsed()) r = run_chow3(c);
        else
            r = verify_suite(o.suite, c, [&](const Section& s) {
                if (!o.quiet)
                    std::cerr << std::fixed << std::setprecision(1) << s.name << ": " << s.checks.size()
                              << " checks, " << s.seconds << " s\n";
            });
        return emit(r, o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "qfwitt/job.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_all(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Witt decomposition of diagonal quadratic forms over Q and Q(sqrt(d))"};
    app.require_subcommand(1);

    std::string input_path, field, form, place, primes;
    std::vector<std::string> hilbert_args;
    bool verify = false, trace = false, json = false;

    auto add_common = [&](CLI::App* sub, bool needs_form) {
        sub->add_option("--input", input_path, "Job file (default: stdin)");
        sub->add_option("--field", field, "Field, e.g. Q or Q(sqrt(-7))");
        if (needs_form)
            sub->add_option("--form", form, "Comma-separated coefficients instead of an input file");
        sub->add_flag("--json", json, "JSON output");
    };

    auto* decompose = app.add_subcommand("decompose", "Anisotropic part and Witt index");
    add_common(decompose, true);
    decompose->add_flag("--verify", verify, "Print and compare invariant certificates");
    decompose->add_flag("--trace", trace, "Print the reduction trace");
    auto* adim = app.add_subcommand("adim", "Anisotropic dimension");
    add_common(adim, true);
    auto* isotropic = app.add_subcommand("isotropic", "Whether the form is isotropic");
    add_common(isotropic, true);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a place");
    hilbert->add_option("args", hilbert_args, "<a> <b> <place>")->expected(3)->required();
    hilbert->add_option("--field", field, "Field (default Q)");
    hilbert->add_flag("--json", json, "JSON output");
    auto* local = app.add_subcommand("local-adim", "Anisotropic dimension over a completion");
    add_common(local, true);
    local->add_option("--place", place, "Prime such as (37, 20+t), real:0 or complex");
    auto* singular = app.add_subcommand("singular-group", "Basis of S-singular elements modulo squares");
    add_common(singular, false);
    singular->add_option("--primes", primes, "Comma-separated primes of S (dyadic primes are added)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    qf::JobSpec job;
    CLI::App* sub = app.get_subcommands().front();
    try {
        job.command = qf::parse_command(sub->get_name());
        const bool wants_form = job.command != qf::Command::Hilbert && job.command != qf::Command::SingularGroup;
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "error: cannot open " << input_path << "\n";
                return 2;
            }
            qf::parse_input(read_all(in), job);
        } else if (wants_form && form.empty()) {
            qf::parse_input(read_all(std::cin), job);
        }
        if (!field.empty())
            job.field_spec = field;
        if (!form.empty())
            job.form = qf::split_top_level(form, ',');
        if (!place.empty())
            job.place = place;
        if (!primes.empty())
            job.primes = qf::split_top_level(primes, ',');
    } catch (const qf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qf::exit_code_for(e.kind());
    }
    job.args = hilbert_args;
    job.verify = verify;
    job.trace = trace;
    job.json = json;

    const qf::JobResult r = qf::run_job(job);
    (r.exit_code == 0 ? std::cout : std::cerr) << r.output;
    return r.exit_code;
}

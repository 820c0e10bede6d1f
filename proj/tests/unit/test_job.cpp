#include "doctest.h"

#include "qfwitt/job.hpp"

#include <string>

using namespace qf;

namespace {

const char* kSixJob = "field Q(sqrt(-7))\nform -3-9*t, -1, -2-6*t, 1-1*t, -6+4*t, -3+2*t, 4-4*t\n";

JobSpec parsed(const std::string& text, Command c = Command::Decompose)
{
    JobSpec job;
    job.command = c;
    parse_input(text, job);
    return job;
}

std::string parse_message(const std::string& text)
{
    try {
        parsed(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.what();
    }
    return "";
}

DiagonalForm form_of(const NumberField& K, const std::vector<std::string>& coeffs)
{
    std::vector<FieldElt> c;
    for (const auto& s : coeffs)
        c.push_back(parse_element(K, s));
    return DiagonalForm(K, c);
}

} // namespace

TEST_CASE("job parsing")
{
    auto job = parsed(kSixJob);
    CHECK(job.field_spec == "Q(sqrt(-7))");
    REQUIRE(job.form.size() == 7);
    CHECK(job.form[0] == "-3-9*t");
    CHECK(job.form[6] == "4-4*t");

    job = parsed("# comment\nfield Q\n\nform 1,-1   # trailing\n");
    CHECK(job.form == std::vector<std::string>{"1", "-1"});

    job = parsed("field Q(sqrt(2))\nform (1+t)/2, 3\nprimes (7, 3+t), (2, t)\n");
    CHECK(job.form.size() == 2);
    CHECK(job.primes.size() == 2);

    CHECK(split_top_level("(1+t)/2, 3, (a,b)", ',') == std::vector<std::string>{"(1+t)/2", "3", "(a,b)"});
}

TEST_CASE("parse errors carry line and column")
{
    const std::string m = parse_message("field Q\nform 1, 2+, 3\n");
    CHECK(m.find("line 2") != std::string::npos);
    CHECK(m.find("column 1") != std::string::npos);
    CHECK(m.find("Parse: line") == m.rfind("Parse:"));
    CHECK(parse_message("field Q\nfrom 1\n").find("line 2, column 1") != std::string::npos);
    CHECK(parse_message("field Q\nform 1, 2*s\n").find("line 2") != std::string::npos);
    CHECK_FALSE(parse_message("field Q\nform 1\ngram 1\n").empty());
}

TEST_CASE("gram diagonalization")
{
    const auto& Q = rationals();
    auto P = [&](const char* s) { return parse_element(Q, s); };

    auto h = diagonalize(Q, {{P("0"), P("1")}, {P("1"), P("0")}});
    REQUIRE(h.dim() == 2);
    CHECK(forms_equivalent(h, form_of(Q, {"1", "-1"}), Equivalence::Isometric));

    auto g = diagonalize(Q, {{P("2"), P("1"), P("0")}, {P("1"), P("2"), P("1")}, {P("0"), P("1"), P("2")}});
    CHECK(forms_equivalent(g, form_of(Q, {"2", "3/2", "4/3"}), Equivalence::Isometric));

    auto z = diagonalize(Q, {{P("0"), P("0"), P("1")}, {P("0"), P("1"), P("0")}, {P("1"), P("0"), P("0")}});
    CHECK(z.dim() == 3);
    CHECK(adim(z) == 1);

    CHECK_THROWS_AS(diagonalize(Q, {{P("1"), P("1")}, {P("1"), P("1")}}), Error);
    try {
        diagonalize(Q, {{P("1"), P("1")}, {P("1"), P("1")}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateForm);
    }
    try {
        diagonalize(Q, {{P("1"), P("2")}, {P("3"), P("1")}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }

    const auto& K = make_field("Q(sqrt(-7))");
    auto PK = [&](const char* s) { return parse_element(K, s); };
    auto k = diagonalize(K, {{PK("t"), PK("1")}, {PK("1"), PK("0")}});
    CHECK(adim(k) == 0);
}

TEST_CASE("run: worked decomposition")
{
    auto job = parsed(kSixJob);
    job.verify = true;
    auto r = run_job(job);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("adim: 3, witt_index: 2") != std::string::npos);
    CHECK(r.output.find("verified: yes") != std::string::npos);

    job.json = true;
    job.trace = true;
    r = run_job(job);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["adim"] == 3);
    CHECK(j["witt_index"] == 2);
    CHECK(j["verified"] == true);
    for (const char* key : {"dim", "disc", "signatures", "hasse", "adim", "witt_index"})
        CHECK(j["certificates"]["form"].contains(key));
    CHECK(j["trace"].contains("alphas"));

    // Round trip: the printed part re-parses to an isometric form, and q is
    // isometric to it plus the hyperbolic planes.
    const auto& K = make_field(j["field"].get<std::string>());
    const auto qa = form_of(K, j["anisotropic_part"].get<std::vector<std::string>>());
    const auto q = form_of(K, job.form);
    CHECK(qa.dim() == 3);
    CHECK(adim(qa) == 3);
    CHECK(forms_equivalent(q, qa.with_hyperbolic(2), Equivalence::Isometric));
}

TEST_CASE("run: small commands and exit codes")
{
    auto run = [](Command c, const std::string& text) { return run_job(parsed(text, c)); };

    auto r = run(Command::Adim, "field Q\nform 1,-1\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "adim: 0\n");
    CHECK(run(Command::Isotropic, "form 1,1,1\n").output == "isotropic: false\n");
    CHECK(run(Command::Isotropic, "form 1,1,-1\n").output == "isotropic: true\n");

    JobSpec h;
    h.command = Command::Hilbert;
    h.args = {"-1", "-1", "2"};
    r = run_job(h);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1\n");
    h.args = {"-1", "-1", "real:0"};
    CHECK(run_job(h).output == "-1\n");
    h.args = {"-1", "-1", "3"};
    CHECK(run_job(h).output == "1\n");

    auto l = parsed("form 1,1,1,1\nplace 2\n", Command::LocalAdim);
    CHECK(run_job(l).output == "local_adim: 4\n");
    l = parsed("form 1,1,1,1\nplace real:0\n", Command::LocalAdim);
    CHECK(run_job(l).output == "local_adim: 4\n");

    JobSpec s;
    s.command = Command::SingularGroup;
    s.field_spec = "Q(sqrt(-5))";
    r = run_job(s);
    CHECK(r.exit_code == 0);

    // Exit codes.
    CHECK(run(Command::Decompose, "form 1, 0\n").exit_code == 1);
    CHECK(run(Command::Decompose, "gram 1,1;1,1\n").exit_code == 1);
    CHECK(run(Command::Decompose, "gram 1,2;3,1\n").exit_code == 2);
    CHECK(run(Command::Decompose, "field Q\n").exit_code == 2);
    JobSpec bad;
    bad.form = {"1"};
    bad.field_spec = "Q(sqrt(4))";
    CHECK(run_job(bad).exit_code == 3);
    bad.field_spec = "Q(cbrt(2))";
    CHECK(run_job(bad).exit_code == 3);
    bad.field_spec = "Q(theta)";
    CHECK(run_job(bad).exit_code == 3);
    bad.field_spec = "cubic";
    CHECK(run_job(bad).exit_code == 3);
    CHECK(exit_code_for(ErrorKind::Internal) == 4);
    CHECK(exit_code_for(ErrorKind::Parse) == 2);
    CHECK(exit_code_for(ErrorKind::DegenerateForm) == 1);
}

#pragma once

// Input parsing and command execution shared by the command-line tool and
// the Python module.

#include "qfwitt/aniso.hpp"
#include "qfwitt/error.hpp"
#include "qfwitt/witt.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qf {

enum class Command { Decompose, Adim, Isotropic, Hilbert, LocalAdim, SingularGroup };

Command parse_command(std::string_view name);
const char* command_name(Command c);

struct JobSpec {
    Command command = Command::Decompose;
    std::string field_spec = "Q";
    std::vector<std::string> form;               // coefficient expressions
    std::vector<std::vector<std::string>> gram;  // symmetric matrix rows
    std::vector<std::string> args;               // hilbert: a b p
    std::string place;                           // local-adim: "(p, g)", "real:i" or "complex"
    std::vector<std::string> primes;             // singular-group
    bool verify = false;
    bool trace = false;
    bool json = false;
};

/// Reads "field", "form", "gram", "place" and "primes" lines into `job`.
/// Errors carry line and column.
void parse_input(std::string_view text, JobSpec& job);

/// Splits at top-level separators, ignoring those inside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// Congruent diagonal form of a symmetric matrix.
DiagonalForm diagonalize(const NumberField& K, std::vector<std::vector<FieldElt>> gram);

/// The form of the job, diagonalizing Gram input.
DiagonalForm job_form(const NumberField& K, const JobSpec& job);

Place parse_place(const NumberField& K, std::string_view text);

nlohmann::json certificate_json(const WittCertificate& c);
nlohmann::json trace_json(const ReductionTrace& t);

struct JobResult {
    std::string output;
    int exit_code = 0;
};

int exit_code_for(ErrorKind kind);

/// Runs the job; errors become diagnostics and an exit code.
JobResult run_job(const JobSpec& job);

} // namespace qf

#include "qfwitt/job.hpp"

#include "qfwitt/class_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qf {

using nlohmann::json;

namespace {

struct Located {
    std::string text;
    int line;
    int column;
};

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

[[noreturn]] void parse_fail(int line, int column, const std::string& msg)
{
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

// Items of `rest` with their 1-based columns in the original line.
std::vector<Located> located_items(const std::string& line_text, std::size_t offset, char sep, int line)
{
    std::vector<Located> out;
    int depth = 0;
    std::size_t start = offset;
    for (std::size_t i = offset; i <= line_text.size(); ++i) {
        char c = i < line_text.size() ? line_text[i] : sep;
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if ((c == sep && depth == 0) || i == line_text.size()) {
            std::string_view piece(line_text.data() + start, i - start);
            std::size_t lead = 0;
            while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead])))
                ++lead;
            std::string item = trim(piece);
            if (item.empty())
                parse_fail(line, static_cast<int>(start + lead + 1), "empty entry");
            out.push_back({item, line, static_cast<int>(start + lead + 1)});
            start = i + 1;
        }
    }
    return out;
}

FieldElt parse_located(const NumberField& K, const Located& item)
{
    try {
        return parse_element(K, item.text);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Parse)
            throw;
        // Inner messages read "Parse: column k: ..." relative to the item.
        std::string msg = e.what();
        int column = item.column;
        const std::string tag = "Parse: column ";
        if (msg.rfind(tag, 0) == 0) {
            std::size_t colon = msg.find(':', tag.size());
            column += std::stoi(msg.substr(tag.size(), colon - tag.size())) - 1;
            msg = trim(std::string_view(msg).substr(colon + 1));
        }
        parse_fail(item.line, column, msg);
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

std::vector<std::string> coeff_strings(const DiagonalForm& q)
{
    std::vector<std::string> out;
    for (const auto& a : q.coeffs())
        out.push_back(a.str());
    return out;
}

std::string certificate_text(const WittCertificate& c)
{
    std::ostringstream os;
    os << "dim=" << c.dim << " disc=" << c.disc.str() << " signatures=[";
    for (std::size_t i = 0; i < c.signatures.size(); ++i)
        os << (i ? ", " : "") << c.signatures[i];
    os << "] hasse={";
    for (std::size_t i = 0; i < c.hasse.size(); ++i)
        os << (i ? ", " : "") << c.hasse[i].first.str() << ": " << c.hasse[i].second;
    os << "} adim=" << c.adim << " witt_index=" << c.witt_index;
    return os.str();
}

std::vector<PrimeIdeal> parse_prime_list(const NumberField& K, const std::vector<std::string>& items)
{
    std::vector<PrimeIdeal> out;
    for (const auto& s : items) {
        std::string t = trim(s);
        if (!t.empty() && t.front() != '(')
            t = "(" + t + ")";
        out.push_back(parse_prime(K, t));
    }
    return out;
}

} // namespace

Command parse_command(std::string_view name)
{
    if (name == "decompose")
        return Command::Decompose;
    if (name == "adim")
        return Command::Adim;
    if (name == "isotropic")
        return Command::Isotropic;
    if (name == "hilbert")
        return Command::Hilbert;
    if (name == "local-adim")
        return Command::LocalAdim;
    if (name == "singular-group")
        return Command::SingularGroup;
    throw Error(ErrorKind::Parse, "unknown command '" + std::string(name) + "'");
}

const char* command_name(Command c)
{
    switch (c) {
    case Command::Decompose: return "decompose";
    case Command::Adim: return "adim";
    case Command::Isotropic: return "isotropic";
    case Command::Hilbert: return "hilbert";
    case Command::LocalAdim: return "local-adim";
    case Command::SingularGroup: return "singular-group";
    }
    return "?";
}

std::vector<std::string> split_top_level(std::string_view text, char sep)
{
    std::vector<std::string> out;
    if (trim(text).empty())
        return out;
    for (auto& item : located_items(std::string(text), 0, sep, 1))
        out.push_back(item.text);
    return out;
}

void parse_input(std::string_view text, JobSpec& job)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    bool form_seen = false, gram_seen = false;
    std::vector<Located> entries;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::size_t pos = 0;
        while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos])))
            ++pos;
        if (pos == raw.size())
            continue;
        std::size_t end = pos;
        while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end])))
            ++end;
        const std::string key = raw.substr(pos, end - pos);
        const std::string rest = trim(std::string_view(raw).substr(end));
        if (key == "field") {
            if (rest.empty())
                parse_fail(line, static_cast<int>(end + 1), "missing field description");
            job.field_spec = rest;
        } else if (key == "form") {
            if (!form_seen)
                job.form.clear();
            form_seen = true;
            for (auto& item : located_items(raw, end, ',', line)) {
                job.form.push_back(item.text);
                entries.push_back(item);
            }
        } else if (key == "gram") {
            if (!gram_seen)
                job.gram.clear();
            gram_seen = true;
            int depth = 0;
            std::size_t start = end;
            for (std::size_t i = end; i <= raw.size(); ++i) {
                char c = i < raw.size() ? raw[i] : ';';
                depth += c == '(' ? 1 : c == ')' ? -1 : 0;
                if ((c == ';' && depth == 0) || i == raw.size()) {
                    std::string row_text(raw.substr(0, i));
                    std::vector<std::string> row;
                    for (auto& item : located_items(row_text, start, ',', line)) {
                        row.push_back(item.text);
                        entries.push_back(item);
                    }
                    job.gram.push_back(row);
                    start = i + 1;
                }
            }
        } else if (key == "place") {
            job.place = rest;
        } else if (key == "primes") {
            job.primes.clear();
            if (!rest.empty())
                for (auto& item : located_items(raw, end, ',', line))
                    job.primes.push_back(item.text);
        } else {
            parse_fail(line, static_cast<int>(pos + 1), "unknown keyword '" + key + "'");
        }
    }
    if (form_seen && gram_seen)
        throw Error(ErrorKind::Parse, "give either a form or a Gram matrix, not both");
    if (!entries.empty()) {
        const NumberField& K = make_field(job.field_spec);
        for (const auto& item : entries)
            parse_located(K, item);
    }
}

DiagonalForm diagonalize(const NumberField& K, std::vector<std::vector<FieldElt>> A)
{
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n)
            throw Error(ErrorKind::Parse, "Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (A[i][j] != A[j][i])
                throw Error(ErrorKind::Parse, "Gram matrix is not symmetric");
    std::vector<FieldElt> diag;
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i][i].is_zero()) {
            std::size_t j = i + 1;
            while (j < n && A[j][j].is_zero())
                ++j;
            if (j < n) {
                std::swap(A[i], A[j]);
                for (auto& row : A)
                    std::swap(row[i], row[j]);
            } else {
                j = i + 1;
                while (j < n && A[i][j].is_zero())
                    ++j;
                if (j == n)
                    throw Error(ErrorKind::DegenerateForm, "Gram matrix is singular");
                // Row and column i += j turns the diagonal entry into 2 A_ij.
                for (std::size_t k = 0; k < n; ++k)
                    A[i][k] += A[j][k];
                for (std::size_t k = 0; k < n; ++k)
                    A[k][i] += A[k][j];
            }
        }
        const FieldElt pivot = A[i][i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (A[j][i].is_zero())
                continue;
            const FieldElt f = A[j][i] / pivot;
            for (std::size_t k = i; k < n; ++k)
                A[j][k] -= f * A[i][k];
            for (std::size_t k = i; k < n; ++k)
                A[k][j] = A[j][k];
        }
        diag.push_back(square_reduce(pivot));
    }
    return DiagonalForm(K, diag);
}

DiagonalForm job_form(const NumberField& K, const JobSpec& job)
{
    if (!job.gram.empty()) {
        std::vector<std::vector<FieldElt>> A;
        for (const auto& row : job.gram) {
            A.emplace_back();
            for (const auto& s : row)
                A.back().push_back(parse_element(K, s));
        }
        return diagonalize(K, A);
    }
    if (job.form.empty())
        throw Error(ErrorKind::Parse, "no form given");
    std::vector<FieldElt> c;
    for (const auto& s : job.form)
        c.push_back(parse_element(K, s));
    return DiagonalForm(K, c);
}

Place parse_place(const NumberField& K, std::string_view text)
{
    std::string t = trim(text);
    if (t == "complex") {
        if (K.num_complex_places() == 0)
            throw Error(ErrorKind::Parse, K.name() + " has no complex place");
        return Place::complex();
    }
    if (t.rfind("real", 0) == 0) {
        std::string idx = trim(std::string_view(t).substr(4));
        if (!idx.empty() && idx.front() == ':')
            idx = trim(std::string_view(idx).substr(1));
        int i = 0;
        try {
            i = idx.empty() ? 0 : std::stoi(idx);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad real place '" + t + "'");
        }
        if (i < 0 || i >= K.num_real_places())
            throw Error(ErrorKind::Parse, "no real place " + std::to_string(i) + " in " + K.name());
        return Place::real(i);
    }
    return Place::finite(parse_prime_list(K, {t}).front());
}

json certificate_json(const WittCertificate& c)
{
    json hasse = json::object();
    for (const auto& [P, s] : c.hasse)
        hasse[P.str()] = s;
    return {{"dim", c.dim},
            {"disc", c.disc.str()},
            {"signatures", c.signatures},
            {"hasse", hasse},
            {"adim", c.adim},
            {"witt_index", c.witt_index}};
}

json trace_json(const ReductionTrace& t)
{
    json j;
    std::vector<std::string> alphas, enlarged;
    for (const auto& a : t.alphas)
        alphas.push_back(a.str());
    for (const auto& P : t.enlarged_primes)
        enlarged.push_back(P.str());
    j["alphas"] = alphas;
    j["padding"] = t.padding;
    j["enlarged_primes"] = enlarged;
    std::vector<int> eps(t.solution_vector.begin(), t.solution_vector.end());
    j["solution_vector"] = eps;
    if (t.system) {
        j["matrix_rows"] = t.system->matrix.size();
        j["matrix_columns"] = t.system->columns.size();
        j["sign_rows"] = t.system->sign_places.size();
        j["hilbert_rows"] = t.system->primes.size();
    }
    if (t.final_part)
        j["final_part"] = coeff_strings(*t.final_part);
    else
        j["final_part"] = json::array();
    return j;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DegenerateForm:
        return 1;
    case ErrorKind::Parse:
    case ErrorKind::NotPrime:
    case ErrorKind::ZeroDivision:
        return 2;
    case ErrorKind::InvalidField:
    case ErrorKind::Unsupported:
        return 3;
    default:
        return 4;
    }
}

namespace {

std::string run_decompose(const NumberField& K, const JobSpec& job, const DiagonalForm& q)
{
    const AnisotropicResult r = anisotropic_part(q);
    const DiagonalForm rebuilt = r.part.with_hyperbolic(r.witt_index);
    std::ostringstream os;
    json j;
    if (job.json) {
        j["field"] = K.name();
        j["form"] = coeff_strings(q);
        j["adim"] = r.part.dim();
        j["witt_index"] = r.witt_index;
        j["anisotropic_part"] = coeff_strings(r.part);
    } else {
        os << "field: " << K.name() << "\n";
        os << "form: " << q.str() << "\n";
        os << "adim: " << r.part.dim() << ", witt_index: " << r.witt_index << "\n";
        os << "anisotropic_part: " << r.part.str() << "\n";
    }
    if (job.verify) {
        const auto S = merge_primes(relevant_primes(q), relevant_primes(rebuilt));
        const auto c1 = certificate(q, S);
        const auto c2 = certificate(rebuilt, S);
        const bool ok = c1.dim == c2.dim && same_class_data(c1, c2) && c2.adim == r.part.dim();
        if (!ok)
            throw Error(ErrorKind::Internal, "certificates of q and its decomposition differ");
        if (job.json) {
            j["certificates"] = {{"form", certificate_json(c1)}, {"decomposition", certificate_json(c2)}};
            j["verified"] = true;
        } else {
            os << "certificate(q): " << certificate_text(c1) << "\n";
            os << "certificate(qa + " << r.witt_index << "H): " << certificate_text(c2) << "\n";
            os << "verified: yes\n";
        }
    }
    if (job.trace) {
        if (job.json) {
            j["trace"] = trace_json(r.trace);
        } else {
            const auto& t = r.trace;
            std::vector<std::string> alphas, enlarged;
            for (const auto& a : t.alphas)
                alphas.push_back(a.str());
            for (const auto& P : t.enlarged_primes)
                enlarged.push_back(P.str());
            os << "trace.alphas: " << (alphas.empty() ? "none" : join(alphas, "; ")) << "\n";
            os << "trace.padding: " << t.padding << "\n";
            os << "trace.enlarged_primes: " << (enlarged.empty() ? "none" : join(enlarged, "; ")) << "\n";
            if (t.system) {
                os << "trace.system: " << t.system->matrix.size() << " x " << t.system->columns.size() << " ("
                   << t.system->sign_places.size() << " sign rows, " << t.system->primes.size() << " hilbert rows)\n";
                std::string eps;
                for (auto b : t.solution_vector)
                    eps += (eps.empty() ? "" : " ") + std::to_string(b);
                os << "trace.solution_vector: " << eps << "\n";
            }
            if (t.final_part)
                os << "trace.final_part: " << t.final_part->str() << "\n";
        }
    }
    if (job.json)
        os << j.dump(2) << "\n";
    return os.str();
}

} // namespace

JobResult run_job(const JobSpec& job)
{
    JobResult res;
    try {
        const NumberField& K = make_field(job.field_spec);
        std::ostringstream os;
        switch (job.command) {
        case Command::Decompose: {
            if (K.kind() == NumberField::Kind::Cubic)
                throw Error(ErrorKind::Unsupported, "decomposition is available over Q and quadratic fields only");
            os << run_decompose(K, job, job_form(K, job));
            break;
        }
        case Command::Adim:
        case Command::Isotropic: {
            const DiagonalForm q = job_form(K, job);
            const int a = adim(q);
            const bool iso = a < q.dim();
            if (job.command == Command::Adim) {
                if (job.json)
                    os << json{{"adim", a}, {"witt_index", (q.dim() - a) / 2}}.dump(2) << "\n";
                else
                    os << "adim: " << a << "\n";
            } else {
                if (job.json)
                    os << json{{"isotropic", iso}}.dump(2) << "\n";
                else
                    os << "isotropic: " << (iso ? "true" : "false") << "\n";
            }
            break;
        }
        case Command::Hilbert: {
            if (job.args.size() != 3)
                throw Error(ErrorKind::Parse, "hilbert needs <a> <b> <place>");
            const FieldElt a = parse_element(K, job.args[0]);
            const FieldElt b = parse_element(K, job.args[1]);
            const Place v = parse_place(K, job.args[2]);
            const int h = hilbert(a, b, v);
            if (job.json)
                os << json{{"hilbert", h}, {"place", v.str()}}.dump(2) << "\n";
            else
                os << h << "\n";
            break;
        }
        case Command::LocalAdim: {
            if (job.place.empty())
                throw Error(ErrorKind::Parse, "local-adim needs a place");
            const DiagonalForm q = job_form(K, job);
            const Place v = parse_place(K, job.place);
            const int a = local_adim(q, v);
            if (job.json)
                os << json{{"local_adim", a}, {"place", v.str()}}.dump(2) << "\n";
            else
                os << "local_adim: " << a << "\n";
            break;
        }
        case Command::SingularGroup: {
            auto S = merge_primes(parse_prime_list(K, job.primes), dyadic_primes(K));
            const SingularBasis sb = singular_group_basis(K, S);
            std::vector<std::string> primes, basis;
            for (const auto& P : sb.S)
                primes.push_back(P.str());
            for (const auto& b : sb.basis)
                basis.push_back(b.str());
            if (job.json) {
                os << json{{"S", primes},
                           {"basis", basis},
                           {"unit_part", sb.unit_part_size},
                           {"class_part", sb.class_part_size}}
                          .dump(2)
                   << "\n";
            } else {
                os << "S: " << join(primes, "; ") << "\n";
                os << "size: " << basis.size() << " (units " << sb.unit_part_size << ", classes "
                   << sb.class_part_size << ")\n";
                for (const auto& b : basis)
                    os << "  " << b << "\n";
            }
            break;
        }
        }
        res.output = os.str();
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.kind());
        res.output = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

} // namespace qf

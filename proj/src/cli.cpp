#include "poncelet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "poncelet/algebra.hpp"
#include "poncelet/cayley.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/tracer.hpp"

namespace poncelet::cli {

using field::Fp;
using field::Prime;
using json = nlohmann::ordered_json;
using pencil::Pencil;
using projective::ProjPoint;

namespace {

Prime make_prime(std::uint64_t p) {
    try {
        return Prime(p);
    } catch (const NotPrime& e) {
        throw CommandError(kInvalidPrime, e.what());
    }
}

Pencil make_pencil(const Prime& p, std::optional<std::uint64_t> c) {
    if (!c) return Pencil(p);
    if (*c == 0 || *c >= p.value()) {
        throw CommandError(kInvalidPrime, "--c must lie in [1, p-1]");
    }
    try {
        return Pencil::with_parameter(p, Fp(*c, p));
    } catch (const DomainError& e) {
        throw CommandError(kInvalidPrime, e.what());
    }
}

json metadata(const std::string& command, std::optional<std::uint64_t> p, std::optional<std::uint64_t> c) {
    json m;
    m["p"] = p ? json(*p) : json(nullptr);
    m["c"] = c ? json(*c) : json(nullptr);
    m["command"] = command;
    m["version"] = kVersion;
    return m;
}

json values(const std::vector<Fp>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.value());
    return a;
}

json triple(const ProjPoint& P) { return json::array({P[0].value(), P[1].value(), P[2].value()}); }

std::string join(const json& arr, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += sep;
        s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return s;
}

std::string set_text(const json& v) { return v.is_null() ? "-" : "{" + join(v, ", ") + "}"; }

void require_length(const Prime& p, unsigned n) {
    if (n < 3) throw CommandError(kDivisibility, "polygon length must be at least 3");
    if ((p.value() + 1) % n != 0) {
        throw CommandError(kDivisibility,
                           std::to_string(n) + " does not divide p+1 = " + std::to_string(p.value() + 1));
    }
}

}  // namespace

OutputDocument cmd_table(std::uint64_t p, std::optional<std::uint64_t> c, bool oracle) {
    const Prime prime = make_prime(p);
    const Pencil pencil = make_pencil(prime, c);
    const pencil::RelationTable table = algebra::relation_table_by_polynomials(pencil);

    OutputDocument doc{"table", metadata("table", p, pencil.c().value()), json::object(), kOk};
    json rows = json::array();
    for (std::uint64_t a = 1; a < p; ++a) {
        json row = json::array();
        for (std::uint64_t b = 1; b < p; ++b) {
            const auto& cell = table.at(a, b);
            row.push_back(cell ? json(*cell) : json(nullptr));
        }
        rows.push_back(std::move(row));
    }
    json lengths = json::object();
    for (const auto& [n, ks] : algebra::coefficient_census(prime)) lengths[std::to_string(n)] = values(ks);

    doc.payload["rows"] = std::move(rows);
    doc.payload["lengths"] = std::move(lengths);
    if (oracle) {
        const bool agrees = tracer::relation_table_by_tracing(pencil) == table;
        doc.payload["oracle"] = {{"method", "tracer"}, {"agrees", agrees}};
        if (!agrees) doc.exit_code = kMismatch;
    }
    return doc;
}

OutputDocument cmd_coeffs(std::uint64_t p, unsigned n) {
    const Prime prime = make_prime(p);
    require_length(prime, n);
    const Pencil pencil(prime);
    OutputDocument doc{"coeffs", metadata("coeffs", p, pencil.c().value()), json::object(), kOk};

    const json by_poly = values(algebra::coefficients_by_polynomial(n, prime));
    json by_iter = nullptr;
    std::optional<std::string> note;
    if (n % 2 == 1) {
        try {
            by_iter = values(algebra::coefficients_by_iteration(n, prime));
        } catch (const AmbiguousIteration& e) {
            note = e.what();
        }
    } else {
        note = "iteration applies to odd n only";
    }
    const bool agree = by_iter.is_null() || by_iter == by_poly;

    doc.payload["n"] = n;
    doc.payload["expected_count"] = algebra::totient(n) / 2;
    doc.payload["coefficients"] = by_poly;
    doc.payload["methods"] = {{"polynomial", by_poly}, {"iteration", by_iter}};
    doc.payload["iteration_note"] = note ? json(*note) : json(nullptr);
    doc.payload["agree"] = agree;
    if (!agree) doc.exit_code = kMismatch;
    return doc;
}

OutputDocument cmd_poly(unsigned n) {
    if (n < 3) throw CommandError(kDivisibility, "polygon length must be at least 3");
    const algebra::IntPolynomial pn = algebra::poncelet_polynomial(n);
    OutputDocument doc{"poly", metadata("poly", std::nullopt, std::nullopt), json::object(), kOk};
    json coeffs = json::array();
    for (const auto& s : pn.to_strings()) coeffs.push_back(s);
    doc.payload["n"] = n;
    doc.payload["degree"] = pn.degree();
    doc.payload["coefficients"] = std::move(coeffs);
    doc.payload["expression"] = pn.to_string();
    return doc;
}

OutputDocument cmd_trace(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta,
                         std::optional<std::vector<std::int64_t>> start, std::optional<std::uint64_t> c) {
    const Prime prime = make_prime(p);
    const Pencil pencil = make_pencil(prime, c);
    if (alpha == 0 || beta == 0 || alpha >= p || beta >= p || alpha == beta) {
        throw CommandError(kNotDiamond, "alpha and beta must be distinct indices in [1, p-1]");
    }
    const Fp a(alpha, prime), b(beta, prime);
    if (!pencil.diamond(a, b)) {
        throw CommandError(kNotDiamond,
                           "O_" + std::to_string(alpha) + " does not lie inside O_" + std::to_string(beta));
    }

    ProjPoint B = pencil.conic_points(b).front();
    if (start) {
        if (start->size() != 3) throw CommandError(kBadStart, "--start needs three coordinates x,y,z");
        const auto coord = [&](std::size_t i) { return Fp::from_signed((*start)[i], prime); };
        const auto P = ProjPoint::try_from({coord(0), coord(1), coord(2)});
        if (!P) throw CommandError(kBadStart, "--start is the zero vector mod p");
        if (!pencil.conic(b).contains(*P)) {
            throw CommandError(kBadStart, "start point is not on O_" + std::to_string(beta));
        }
        B = *P;
    }

    const tracer::Polygon poly = tracer::trace(pencil, a, b, B);
    const tracer::SumReport sums = tracer::sum_report(poly);
    OutputDocument doc{"trace", metadata("trace", p, pencil.c().value()), json::object(), kOk};
    json vertices = json::array(), contacts = json::array();
    for (const auto& V : poly.vertices) vertices.push_back(triple(V));
    for (const auto& A : poly.contacts) contacts.push_back(triple(A));
    const auto opt = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };

    doc.payload["alpha"] = alpha;
    doc.payload["beta"] = beta;
    doc.payload["n"] = poly.n;
    doc.payload["start"] = triple(B);
    doc.payload["vertices"] = std::move(vertices);
    doc.payload["contacts"] = std::move(contacts);
    doc.payload["sums"] = {{"vertex_sum", sums.vertex_sum},
                           {"contact_sum", sums.contact_sum},
                           {"alternating_contacts", opt(sums.alternating_contacts)},
                           {"opposite_vertices", opt(sums.opposite_vertices)},
                           {"plus_on_a", sums.plus_on_a}};
    if (!sums.all()) doc.exit_code = kMismatch;
    return doc;
}

namespace {

struct PrimeReport {
    std::uint64_t p = 0;
    json cells = json::array();
    json census = json::object();
    bool census_ok = false;
    std::optional<std::string> error;
};

PrimeReport verify_prime(std::uint64_t pv, unsigned n_max) {
    PrimeReport r;
    r.p = pv;
    try {
        const Prime p(pv);
        const Pencil pencil(p);
        const Fp one(1, p);
        const auto census = tracer::census(pencil, one);

        std::size_t total = 0;
        bool sizes = true;
        for (const auto& [n, ks] : census) {
            total += ks.size();
            sizes = sizes && n >= 3 && (pv + 1) % n == 0 && ks.size() == algebra::totient(n) / 2;
            r.census[std::to_string(n)] = values(ks);
        }
        r.census_ok = sizes && total == (pv - 1) / 2;

        for (unsigned n : algebra::polygon_lengths(p)) {
            if (n > n_max) continue;
            const auto it = census.find(n);
            const json traced = it == census.end() ? json::array() : values(it->second);
            const json poly = values(algebra::poncelet_polynomial(n).roots_mod(p));
            const json cay = values(cayley::criterion_polynomial(n).roots_mod(p));
            json iter = nullptr;
            if (n % 2 == 1) {
                try {
                    iter = values(algebra::coefficients_by_iteration(n, p));
                } catch (const AmbiguousIteration&) {
                    iter = nullptr;
                }
            }
            const std::size_t expected = algebra::totient(n) / 2;
            const bool pass = traced.size() == expected && poly == traced && cay == traced &&
                              (iter.is_null() || iter == traced);
            json cell;
            cell["p"] = pv;
            cell["n"] = n;
            cell["expected_count"] = expected;
            cell["tracer"] = traced;
            cell["polynomial"] = poly;
            cell["iteration"] = iter;
            cell["cayley"] = cay;
            cell["pass"] = pass;
            r.cells.push_back(std::move(cell));
        }
    } catch (const std::exception& e) {
        r.error = e.what();
        r.census_ok = false;
    }
    return r;
}

}  // namespace

OutputDocument cmd_verify(std::uint64_t p_max, unsigned n_max) {
    std::vector<std::future<PrimeReport>> jobs;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (field::is_prime(p)) jobs.push_back(std::async(std::launch::async, verify_prime, p, n_max));
    }

    OutputDocument doc{"verify", metadata("verify", std::nullopt, std::nullopt), json::object(), kOk};
    json primes = json::array(), cells = json::array();
    std::size_t cell_count = 0, failures = 0;
    for (auto& job : jobs) {
        PrimeReport r = job.get();
        json entry;
        entry["p"] = r.p;
        entry["census"] = r.census;
        entry["census_ok"] = r.census_ok;
        entry["error"] = r.error ? json(*r.error) : json(nullptr);
        if (!r.census_ok) ++failures;
        for (auto& cell : r.cells) {
            ++cell_count;
            if (!cell["pass"].get<bool>()) ++failures;
            cells.push_back(std::move(cell));
        }
        primes.push_back(std::move(entry));
    }
    doc.payload["p_max"] = p_max;
    doc.payload["n_max"] = n_max;
    doc.payload["primes"] = std::move(primes);
    doc.payload["cells"] = std::move(cells);
    doc.payload["summary"] = {{"primes", jobs.size()}, {"cells", cell_count}, {"failures", failures}};
    if (failures) doc.exit_code = kMismatch;
    return doc;
}

namespace {

void render_table(const OutputDocument& doc, Format format, std::ostream& out) {
    const auto& rows = doc.payload["rows"];
    const std::uint64_t p = doc.metadata["p"].get<std::uint64_t>();
    if (format == Format::csv) {
        out << "alpha";
        for (std::uint64_t b = 1; b < p; ++b) out << ',' << b;
        out << '\n';
        for (std::size_t a = 0; a < rows.size(); ++a) {
            out << a + 1;
            for (const auto& cell : rows[a]) out << ',' << (cell.is_null() ? "" : cell.dump());
            out << '\n';
        }
        return;
    }
    const int w = static_cast<int>(std::to_string(p + 1).size()) + 1;
    out << "PG(2," << p << "), c = " << doc.metadata["c"].dump()
        << "; rows: inner conic O_alpha, columns: outer conic O_beta\n";
    out << std::setw(w + 1) << "a\\b";
    for (std::uint64_t b = 1; b < p; ++b) out << std::setw(w) << b;
    out << '\n';
    for (std::size_t a = 0; a < rows.size(); ++a) {
        out << std::setw(w + 1) << a + 1;
        for (const auto& cell : rows[a]) out << std::setw(w) << (cell.is_null() ? std::string(".") : cell.dump());
        out << '\n';
    }
    out << "lengths:";
    for (const auto& [n, ks] : doc.payload["lengths"].items()) out << "  " << n << ": " << set_text(ks);
    out << '\n';
    if (doc.payload.contains("oracle")) {
        out << "tracer oracle: " << (doc.payload["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << '\n';
    }
}

void render_coeffs(const OutputDocument& doc, Format format, std::ostream& out) {
    const auto& pl = doc.payload;
    if (format == Format::csv) {
        out << "n,coefficient\n";
        for (const auto& k : pl["coefficients"]) out << pl["n"].dump() << ',' << k.dump() << '\n';
        return;
    }
    out << "p = " << doc.metadata["p"].dump() << ", n = " << pl["n"].dump() << ", expected "
        << pl["expected_count"].dump() << " coefficients\n";
    out << "polynomial: " << set_text(pl["methods"]["polynomial"]) << '\n';
    out << "iteration:  " << set_text(pl["methods"]["iteration"]);
    if (!pl["iteration_note"].is_null()) out << "  (" << pl["iteration_note"].get<std::string>() << ")";
    out << '\n';
    out << "agree: " << (pl["agree"].get<bool>() ? "yes" : "NO") << '\n';
}

void render_poly(const OutputDocument& doc, Format format, std::ostream& out) {
    const auto& pl = doc.payload;
    if (format == Format::csv) {
        out << "degree,coefficient\n";
        const auto& cs = pl["coefficients"];
        for (std::size_t i = 0; i < cs.size(); ++i) out << i << ',' << cs[i].get<std::string>() << '\n';
        return;
    }
    out << "P_" << pl["n"].dump() << "(k) = " << pl["expression"].get<std::string>() << '\n';
    out << "degree " << pl["degree"].dump() << '\n';
}

void render_trace(const OutputDocument& doc, Format format, std::ostream& out) {
    const auto& pl = doc.payload;
    const auto& vs = pl["vertices"];
    const auto& as = pl["contacts"];
    if (format == Format::csv) {
        out << "index,bx,by,bz,ax,ay,az\n";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            out << i + 1 << ',' << join(vs[i], ",") << ',' << join(as[i], ",") << '\n';
        }
        return;
    }
    out << "O_" << pl["alpha"].dump() << " inside O_" << pl["beta"].dump() << " in PG(2," << doc.metadata["p"].dump()
        << "), c = " << doc.metadata["c"].dump() << ": n = " << pl["n"].dump() << '\n';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out << "  B" << i + 1 << " = (" << join(vs[i], ",") << ")   A" << i + 1 << " = (" << join(as[i], ",")
            << ")\n";
    }
    out << "sums:";
    for (const auto& [name, v] : pl["sums"].items()) {
        out << ' ' << name << '=' << (v.is_null() ? "n/a" : (v.get<bool>() ? "ok" : "FAIL"));
    }
    out << '\n';
}

void render_verify(const OutputDocument& doc, Format format, std::ostream& out) {
    const auto& pl = doc.payload;
    if (format == Format::csv) {
        out << "p,n,expected_count,tracer,polynomial,iteration,cayley,pass\n";
        for (const auto& c : pl["cells"]) {
            out << c["p"].dump() << ',' << c["n"].dump() << ',' << c["expected_count"].dump() << ','
                << join(c["tracer"], ";") << ',' << join(c["polynomial"], ";") << ','
                << (c["iteration"].is_null() ? "" : join(c["iteration"], ";")) << ',' << join(c["cayley"], ";")
                << ',' << (c["pass"].get<bool>() ? 1 : 0) << '\n';
        }
        return;
    }
    for (const auto& pr : pl["primes"]) {
        out << "p = " << pr["p"].dump() << ": census " << (pr["census_ok"].get<bool>() ? "ok" : "FAIL");
        if (!pr["error"].is_null()) out << " (" << pr["error"].get<std::string>() << ")";
        out << '\n';
        for (const auto& c : pl["cells"]) {
            if (c["p"] != pr["p"]) continue;
            out << "  n = " << std::setw(3) << c["n"].dump() << "  tracer " << set_text(c["tracer"]) << "  poly "
                << set_text(c["polynomial"]) << "  iter " << set_text(c["iteration"]) << "  cayley "
                << set_text(c["cayley"]) << "  " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
        }
    }
    const auto& s = pl["summary"];
    out << s["primes"].dump() << " primes, " << s["cells"].dump() << " cells, " << s["failures"].dump()
        << " failures\n";
}

}  // namespace

void render(const OutputDocument& doc, Format format, std::ostream& out) {
    if (format == Format::json) {
        json full;
        full["metadata"] = doc.metadata;
        full["payload"] = doc.payload;
        out << full.dump(2) << '\n';
        return;
    }
    if (doc.command == "table") return render_table(doc, format, out);
    if (doc.command == "coeffs") return render_coeffs(doc, format, out);
    if (doc.command == "poly") return render_poly(doc, format, out);
    if (doc.command == "trace") return render_trace(doc, format, out);
    if (doc.command == "verify") return render_verify(doc, format, out);
}

namespace {

std::vector<std::int64_t> parse_start(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CommandError(kBadStart, "--start expects integers x,y,z, got '" + text + "'");
        }
    }
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poncelet polygons for the conic pencil x^2 + k y^2 + c k z^2 = 0 in PG(2,p)", "poncelet"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "plain";
    std::uint64_t p = 0, alpha = 0, beta = 0, c = 0, p_max = 31;
    unsigned n = 0, n_max = 32;
    std::string start;
    bool oracle = false;

    const auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    auto* table = app.add_subcommand("table", "relation table, rows inner conic, columns outer conic");
    table->add_option("--p", p, "odd prime")->required();
    auto* table_c = table->add_option("--c", c, "pencil parameter (default: smallest admissible)");
    table->add_flag("--oracle", oracle, "recompute every cell with the tracer");
    with_format(table);

    auto* coeffs = app.add_subcommand("coeffs", "coefficients k with (O_k, O_1) carrying an n-gon");
    coeffs->add_option("--p", p, "odd prime")->required();
    coeffs->add_option("--n", n, "polygon length, must divide p+1")->required();
    with_format(coeffs);

    auto* poly = app.add_subcommand("poly", "Poncelet polynomial P_n");
    poly->add_option("--n", n, "polygon length")->required()->check(CLI::Range(0u, 5000u));
    with_format(poly);

    auto* trace = app.add_subcommand("trace", "trace a polygon around O_beta tangent to O_alpha");
    trace->add_option("--p", p, "odd prime")->required();
    trace->add_option("--alpha", alpha, "inner conic index")->required();
    trace->add_option("--beta", beta, "outer conic index")->required();
    auto* trace_start = trace->add_option("--start", start, "start vertex x,y,z on O_beta");
    auto* trace_c = trace->add_option("--c", c, "pencil parameter (default: smallest admissible)");
    with_format(trace);

    auto* verify = app.add_subcommand("verify", "cross-check tracer, polynomials, iteration and Cayley");
    verify->add_option("--p-max", p_max, "largest prime")->capture_default_str();
    verify->add_option("--n-max", n_max, "largest polygon length")->capture_default_str();
    with_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;
    try {
        OutputDocument doc;
        if (table->parsed()) {
            doc = cmd_table(p, *table_c ? std::optional<std::uint64_t>(c) : std::nullopt, oracle);
        } else if (coeffs->parsed()) {
            doc = cmd_coeffs(p, n);
        } else if (poly->parsed()) {
            doc = cmd_poly(n);
        } else if (trace->parsed()) {
            std::optional<std::vector<std::int64_t>> s;
            if (*trace_start) s = parse_start(start);
            doc = cmd_trace(p, alpha, beta, s, *trace_c ? std::optional<std::uint64_t>(c) : std::nullopt);
        } else {
            doc = cmd_verify(p_max, n_max);
        }
        render(doc, fmt, out);
        return doc.exit_code;
    } catch (const CommandError& e) {
        err << "error: " << e.what() << '\n';
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    }
}

}  // namespace poncelet::cli

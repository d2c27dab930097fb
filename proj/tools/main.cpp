// aegyptus: exact Egyptian-fraction toolkit.
//
// Subcommands: decompose, es (verify|classes|count|solve),
// census (enumerate|count|subset|interval|konyagin), huffman, landau.
// Exit codes: 0 ok, 1 usage, 2 budget exceeded / no result, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <aegyptus/census.hpp>
#include <aegyptus/core.hpp>
#include <aegyptus/decompose.hpp>
#include <aegyptus/erdos_straus.hpp>
#include <aegyptus/huffman.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using nlohmann::json;
using namespace aegyptus;

namespace {

enum class Format { plain, csv, json_fmt };

struct Options {
    Format format = Format::plain;
    unsigned threads = 0;  // 0: resolve from env / hardware
    std::string output_path;
    unsigned long factor_budget = 1ul << 20;
};

unsigned resolve_threads(const Options& opt) {
    if (opt.threads > 0) return opt.threads;
    if (const char* env = std::getenv("AEGYPTUS_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

Rat parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            return make_rat(num, den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            Int num(digits);
            Int den = pow_ui(10, static_cast<unsigned long>(text.size() - dot - 1));
            return make_rat(num, den);
        }
        return Rat(Int(text));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("cannot parse rational: " + text);
    }
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

json to_json_list(const std::vector<Int>& xs) {
    json arr = json::array();
    for (const Int& x : xs) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

struct Output {
    std::ofstream file;
    std::ostream* out = &std::cout;

    void open(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        out = &file;
    }
};

// ---- decompose ------------------------------------------------------------

int run_decompose(const Options& opt, const std::string& rational, const std::string& mode,
                  unsigned kmax, const std::string& base) {
    Output sink;
    sink.open(opt.output_path);
    Rat q = parse_rational(rational);

    std::optional<Decomposition> result;
    int k_found = -1;
    if (mode == "greedy") {
        result = greedy(q);
    } else if (mode == "scheme") {
        result = divisor_scheme(q, base == "binary" ? DivisorBase::binary
                                                    : DivisorBase::primorial);
    } else if (mode == "stewart") {
        if (q.get_num() == 0) throw std::domain_error("stewart: need a positive rational");
        auto w = stewart_two_term(q.get_num(), q.get_den(), FactorBudget{opt.factor_budget, 64});
        if (!w) return 2;
        result = Decomposition(q, UnitFractionSum({w->first, w->second}), Method::stewart);
    } else {  // min-terms
        auto r = min_terms(q, kmax);
        if (!r) return 2;
        k_found = static_cast<int>(r->denominators.size());
        result = *r;
    }

    // every emitted solution re-checks through the exact sum
    if (result->denominators.value() != q) throw std::logic_error("decompose: sum mismatch");

    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1},
               {"input", q.get_str()},
               {"method", method_name(result->method)},
               {"denominators", to_json_list(result->denominators.denominators())}};
        if (k_found >= 0) j["k"] = k_found;
        *sink.out << j.dump() << "\n";
    } else {
        if (k_found >= 0) *sink.out << "k=" << k_found << "\n";
        *sink.out << result->denominators.to_string() << "\n";
    }
    return 0;
}

// ---- es ---------------------------------------------------------------------

int run_es_verify(const Options& opt, es::u64 from, es::u64 to, const std::string& cert_path,
                  unsigned long class_bound) {
    Output sink;
    sink.open(opt.output_path);

    es::VerifyContext ctx(to, class_bound);
    unsigned threads = resolve_threads(opt);
    const es::u64 block = 1 << 16;
    std::vector<std::pair<es::u64, es::u64>> blocks;
    for (es::u64 lo = from; lo <= to; lo += block)
        blocks.emplace_back(lo, std::min(to, lo + block - 1));

    std::vector<es::VerifyReport> reports(blocks.size());
    std::vector<std::string> certs(blocks.size());
    const bool want_certs = !cert_path.empty();

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < blocks.size();) {
            std::string buf;
            es::CertificateSink cs;
            if (want_certs)
                cs = [&buf](const es::Certificate& c) {
                    buf += std::to_string(c.n);
                    buf += ',';
                    buf += es::verify_method_name(c.method);
                    buf += ',';
                    buf += es::detail::u128_str(c.x);
                    buf += ',';
                    buf += es::detail::u128_str(c.y);
                    buf += ',';
                    buf += es::detail::u128_str(c.z);
                    buf += '\n';
                };
            reports[i] = es::verify_range(ctx, blocks[i].first, blocks[i].second, cs);
            certs[i] = std::move(buf);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    es::VerifyReport total;
    for (const auto& r : reports) total.merge(r);
    std::sort(total.failures.begin(), total.failures.end());

    if (want_certs) {
        if (cert_path == "-") {
            *sink.out << "n,method,x,y,z\n";
            for (const std::string& c : certs) *sink.out << c;
        } else {
            std::ofstream cf(cert_path);
            if (!cf) throw std::runtime_error("cannot open certificate file: " + cert_path);
            cf << "n,method,x,y,z\n";
            for (const std::string& c : certs) cf << c;
        }
    }

    if (opt.format == Format::json_fmt) {
        json methods = json::object();
        for (const auto& [name, cnt] : total.by_method) methods[name] = cnt;
        json j{{"schema", 1},       {"from", from},
               {"to", to},          {"verified", total.verified},
               {"failures", total.failures}, {"methods", methods}};
        *sink.out << j.dump() << "\n";
    } else {
        *sink.out << "verified=" << total.verified << " failures=" << total.failures.size()
                  << "\n";
        for (const auto& [name, cnt] : total.by_method)
            *sink.out << "method." << name << "=" << cnt << "\n";
        for (es::u64 n : total.failures) *sink.out << "FAIL " << n << "\n";
    }
    return total.failures.empty() ? 0 : 3;
}

int run_es_classes(const Options& opt, long modulus) {
    Output sink;
    sink.open(opt.output_path);
    std::vector<Int> res = es::uncovered_classes(modulus);
    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1}, {"modulus", modulus}, {"uncovered", to_json_list(res)}};
        *sink.out << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < res.size(); ++i)
            *sink.out << (i ? "," : "") << res[i];
        *sink.out << "\n";
    }
    return 0;
}

int run_es_count(const Options& opt, unsigned long n, bool multiset) {
    Output sink;
    sink.open(opt.output_path);
    es::u64 c = es::f_count(n, multiset ? es::Flavor::multiset_unordered
                                        : es::Flavor::distinct_unordered);
    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1}, {"n", n}, {"flavor", multiset ? "multiset" : "distinct"},
               {"count", c}};
        *sink.out << j.dump() << "\n";
    } else {
        *sink.out << c << "\n";
    }
    return 0;
}

int run_es_solve(const Options& opt, unsigned long m, unsigned long n) {
    Output sink;
    sink.open(opt.output_path);
    auto w = es::solve_three(m, n);
    if (!w) return 2;
    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1}, {"m", m}, {"n", n},
               {"witness", to_json_list({(*w)[0], (*w)[1], (*w)[2]})}};
        *sink.out << j.dump() << "\n";
    } else {
        *sink.out << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << "\n";
    }
    return 0;
}

// ---- census -------------------------------------------------------------------

struct CensusFlags {
    unsigned k = 3;
    bool multiset = false;
    long min_denominator = -1;  // default depends on target
    std::string target = "1";
    bool odd = false;
    std::string interval, progression, set_list, max_denominator;
};

census::Query build_query(const CensusFlags& f) {
    census::Query q;
    q.k = f.k;
    q.distinct = !f.multiset;
    q.target = parse_rational(f.target);
    q.min_denominator = f.min_denominator >= 1 ? Int(f.min_denominator)
                                               : (q.target == 1 ? Int(2) : Int(1));
    if (f.odd) q.predicate = census::Predicate::odd();
    if (!f.interval.empty()) {
        auto xs = parse_int_list(f.interval);
        if (xs.size() != 2) throw std::domain_error("--interval needs LO,HI");
        q.predicate = census::Predicate::interval(xs[0], xs[1]);
    }
    if (!f.progression.empty()) {
        auto xs = parse_int_list(f.progression);
        if (xs.size() != 2) throw std::domain_error("--progression needs A,Q");
        q.predicate = census::Predicate::progression(xs[0], xs[1]);
    }
    if (!f.set_list.empty()) q.predicate = census::Predicate::explicit_set(parse_int_list(f.set_list));
    if (!f.max_denominator.empty()) q.max_denominator = Int(f.max_denominator);
    return q;
}

void emit_solution_line(std::ostream& out, Format fmt, const std::vector<Int>& xs) {
    if (fmt == Format::json_fmt) {
        out << to_json_list(xs).dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << "\n";
}

int run_census_enumerate(const Options& opt, const CensusFlags& flags) {
    Output sink;
    sink.open(opt.output_path);
    census::Query q = build_query(flags);
    unsigned threads = resolve_threads(opt);

    if (threads <= 1 || q.k < 2) {
        census::enumerate(q, [&](const std::vector<Int>& xs) {
            // re-check the exact sum before anything is printed
            if (UnitFractionSum(xs).value() != q.target)
                throw std::logic_error("census: emitted solution does not verify");
            emit_solution_line(*sink.out, opt.format, xs);
            return true;
        });
        return 0;
    }

    // deterministic merge: workers own disjoint first denominators, output is
    // stitched in candidate order
    std::vector<Int> firsts = census::first_denominator_candidates(q);
    std::vector<std::string> buffers(firsts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < firsts.size();) {
            std::ostringstream buf;
            census::enumerate_with_first(q, firsts[i], [&](const std::vector<Int>& xs) {
                if (UnitFractionSum(xs).value() != q.target)
                    throw std::logic_error("census: emitted solution does not verify");
                emit_solution_line(buf, opt.format, xs);
                return true;
            });
            buffers[i] = buf.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const std::string& b : buffers) *sink.out << b;
    return 0;
}

int run_census_count(const Options& opt, const CensusFlags& flags) {
    Output sink;
    sink.open(opt.output_path);
    census::Query q = build_query(flags);
    census::CountReport rep = census::count(q);
    if (opt.format == Format::csv) {
        *sink.out << "k,flavor,count,bound_box\n"
                  << rep.k << "," << (rep.distinct ? "distinct" : "multiset") << ","
                  << rep.count << "," << rep.bound_box << "\n";
    } else {
        json j{{"schema", 1},
               {"k", rep.k},
               {"flavor", rep.distinct ? "distinct" : "multiset"},
               {"count", rep.count.fits_slong_p() ? json(rep.count.get_si())
                                                  : json(rep.count.get_str())},
               {"bound_box", rep.bound_box.get_str()}};
        *sink.out << j.dump() << "\n";
    }
    return 0;
}

int run_census_subset(const Options& opt, const std::string& set_list,
                      unsigned long node_budget) {
    Output sink;
    sink.open(opt.output_path);
    census::SubsetResult r = census::subset_solution(parse_int_list(set_list), node_budget);
    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1},
               {"found", r.solution.has_value()},
               {"trivial_obstruction", r.trivial_obstruction},
               {"nodes", r.nodes}};
        if (r.solution) j["solution"] = to_json_list(r.solution->denominators());
        *sink.out << j.dump() << "\n";
    } else if (r.solution) {
        *sink.out << r.solution->to_string() << "\n";
    } else {
        *sink.out << (r.trivial_obstruction ? "none (reciprocal sum below 1)"
                                            : "none (search exhausted)")
                  << "\n";
    }
    return r.solution ? 0 : 2;
}

int run_census_interval(const Options& opt, const std::string& n, const std::string& c,
                        unsigned long node_budget) {
    Output sink;
    sink.open(opt.output_path);
    census::SubsetResult r = census::interval_search(Int(n), parse_rational(c), node_budget);
    if (opt.format == Format::json_fmt) {
        json j{{"schema", 1},
               {"found", r.solution.has_value()},
               {"trivial_obstruction", r.trivial_obstruction},
               {"nodes", r.nodes}};
        if (r.solution) j["solution"] = to_json_list(r.solution->denominators());
        *sink.out << j.dump() << "\n";
    } else if (r.solution) {
        *sink.out << r.solution->to_string() << "\n";
    } else {
        *sink.out << (r.trivial_obstruction ? "none (reciprocal sum below 1)"
                                            : "none (search exhausted)")
                  << "\n";
    }
    return r.solution ? 0 : 2;
}

int run_census_konyagin(const Options& opt, unsigned n, unsigned long budget) {
    Output sink;
    sink.open(opt.output_path);
    auto sols = census::konyagin_generate(n, budget);
    for (const auto& s : sols) {
        if (opt.format == Format::json_fmt) {
            json j{{"schema", 1},
                   {"n", s.n},
                   {"split_divisor", s.split_divisor ? s.split_divisor->get_str() : ""},
                   {"denominators", to_json_list(s.denominators.denominators())}};
            *sink.out << j.dump() << "\n";
        } else {
            *sink.out << s.denominators.to_string() << "\n";
        }
    }
    return 0;
}

// ---- huffman / landau -----------------------------------------------------------

int run_huffman(const Options& opt, unsigned t, unsigned k, bool count_only, bool codes) {
    Output sink;
    sink.open(opt.output_path);
    if (count_only) {
        Int c = huffman::count_profiles(t, k);
        *sink.out << c << "\n";
        return 0;
    }
    auto ps = huffman::profiles(t, k);
    for (const auto& p : ps) {
        if (codes) {
            huffman::PrefixCode code = huffman::profile_to_code(p);
            json j{{"schema", 1}, {"t", t}, {"lengths", p.lengths}, {"words", code.words}};
            *sink.out << j.dump() << "\n";
        } else if (opt.format == Format::json_fmt) {
            json j{{"schema", 1}, {"t", t}, {"lengths", p.lengths}};
            *sink.out << j.dump() << "\n";
        } else {
            *sink.out << p.to_string() << "\n";
        }
    }
    return 0;
}

int run_landau(const Options& opt, unsigned k, bool no_filter) {
    Output sink;
    sink.open(opt.output_path);
    census::LandauReport rep = census::landau_enumerate(k, !no_filter);
    if (opt.format == Format::json_fmt) {
        json eqs = json::array();
        for (const auto& e : rep.equations)
            eqs.push_back(json{{"order", e.order.get_str()}, {"sizes", to_json_list(e.sizes)}});
        json j{{"schema", 1},
               {"k", k},
               {"max_order", rep.max_order.get_str()},
               {"box_bound", rep.box_bound.get_str()},
               {"class_equations", eqs}};
        *sink.out << j.dump() << "\n";
    } else {
        for (const auto& e : rep.equations) {
            *sink.out << e.order << " =";
            for (std::size_t i = 0; i < e.sizes.size(); ++i)
                *sink.out << (i ? " + " : " ") << e.sizes[i];
            *sink.out << "\n";
        }
        *sink.out << "max_order=" << rep.max_order << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aegyptus: exact Egyptian fraction toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, Format> fmt_map{
        {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json_fmt}};
    app.add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));
    app.add_option("--threads", opt.threads, "worker threads (default: AEGYPTUS_THREADS or hardware)");
    app.add_option("-o,--output", opt.output_path, "write output to a file instead of stdout");
    app.add_option("--factor-budget", opt.factor_budget, "trial division bound for factorizations");

    // decompose
    auto* dec = app.add_subcommand("decompose", "write a rational as distinct unit fractions");
    std::string rational, base = "primorial";
    unsigned kmax = 4;
    dec->add_option("rational", rational, "target, e.g. 4/17")->required();
    bool g = false, s = false, scheme = false, mt = false;
    dec->add_flag("--greedy", g, "greedy expansion (default)");
    dec->add_flag("--stewart", s, "two-term witness by Stewart's criterion");
    dec->add_flag("--divisor-scheme", scheme, "divisor-dense scheme");
    dec->add_flag("--min-terms", mt, "least number of terms (exhaustive)");
    dec->add_option("--kmax", kmax, "term bound for --min-terms");
    dec->add_option("--base", base, "divisor scheme base: binary|primorial")
        ->check(CLI::IsMember({"binary", "primorial"}));

    // es
    auto* esc = app.add_subcommand("es", "Erdos-Straus machinery for 4/n");
    esc->require_subcommand(1);
    auto* esv = esc->add_subcommand("verify", "verify a range of n");
    unsigned long from = 2, to = 1000;
    std::string cert_path;
    unsigned long class_bound = 120;
    esv->add_option("--from", from, "start of range")->required();
    esv->add_option("--to", to, "end of range")->required();
    esv->add_option("--certificates", cert_path, "stream per-n certificates to file ('-' = stdout)");
    esv->add_option("--class-bound", class_bound, "parameter bound for the congruence sieve");
    auto* escl = esc->add_subcommand("classes", "uncovered congruence classes");
    long modulus = 840;
    escl->add_option("--modulus", modulus, "modulus M")->required();
    auto* escnt = esc->add_subcommand("count", "f(n): three-term representation count");
    unsigned long fn = 5;
    bool multiset_count = false;
    escnt->add_option("--n", fn, "denominator n")->required();
    escnt->add_flag("--multiset", multiset_count, "count multiset solutions");
    auto* essol = esc->add_subcommand("solve", "first three-term witness for m/n");
    unsigned long sm = 4, sn = 5;
    essol->add_option("--m", sm, "numerator")->required();
    essol->add_option("--n", sn, "denominator")->required();

    // census
    auto* cen = app.add_subcommand("census", "unit fraction partitions of a rational");
    cen->require_subcommand(1);
    CensusFlags cf;
    bool distinct_flag = false;
    auto add_census_flags = [&cf, &distinct_flag](CLI::App* c) {
        c->add_option("--k", cf.k, "number of terms")->required();
        c->add_flag("--multiset", cf.multiset, "allow repeated denominators");
        c->add_flag("--distinct", distinct_flag, "require distinct denominators (default)");
        c->add_option("--min-denominator", cf.min_denominator, "smallest admissible denominator");
        c->add_option("--target", cf.target, "target rational (default 1)");
        c->add_flag("--odd", cf.odd, "odd denominators only");
        c->add_option("--interval", cf.interval, "denominators within LO,HI");
        c->add_option("--progression", cf.progression, "denominators ≡ A mod Q, as A,Q");
        c->add_option("--set", cf.set_list, "explicit comma-separated denominator set");
        c->add_option("--max-denominator", cf.max_denominator, "cap on denominators");
    };
    auto* cene = cen->add_subcommand("enumerate", "stream solutions");
    add_census_flags(cene);
    auto* cenc = cen->add_subcommand("count", "count solutions");
    add_census_flags(cenc);
    auto* cens = cen->add_subcommand("subset", "subset of a finite set with reciprocal sum 1");
    std::string subset_list;
    unsigned long node_budget = 50'000'000;
    cens->add_option("--set", subset_list, "comma-separated candidate denominators")->required();
    cens->add_option("--node-budget", node_budget, "search node budget");
    auto* ceni = cen->add_subcommand("interval", "search (N, C*N] for a reciprocal subset sum 1");
    std::string in_n = "10", in_c = "271828/100000";
    ceni->add_option("--n", in_n, "left endpoint N")->required();
    ceni->add_option("--c", in_c, "multiplier C (rational or decimal)");
    ceni->add_option("--node-budget", node_budget, "search node budget");
    auto* cenk = cen->add_subcommand("konyagin", "divisor-split solutions through 1/(2^n - 1)");
    unsigned kon_n = 6;
    unsigned long kon_budget = 1ul << 20;
    cenk->add_option("--n", kon_n, "exponent n")->required();
    cenk->add_option("--budget", kon_budget, "max emitted solutions");

    // huffman
    auto* huf = app.add_subcommand("huffman", "compact prefix-free codes via Kraft equality");
    unsigned ht = 2, hk = 5;
    bool hcount = false, hcodes = false;
    huf->add_option("--t", ht, "alphabet size")->required();
    huf->add_option("--k", hk, "number of words")->required();
    huf->add_flag("--count", hcount, "print only the number of profiles");
    huf->add_flag("--codes", hcodes, "emit canonical codes as JSON");

    // landau
    auto* lan = app.add_subcommand("landau", "class equation candidates with k classes");
    unsigned lk = 3;
    bool lan_nofilter = false;
    lan->add_option("--k", lk, "number of conjugacy classes")->required();
    lan->add_flag("--no-divisibility-filter", lan_nofilter, "skip the size-divides-order filter");

    // allow the global options to appear after a subcommand as well
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (dec->parsed()) {
            std::string mode = "greedy";
            if (s) mode = "stewart";
            if (scheme) mode = "scheme";
            if (mt) mode = "min-terms";
            return run_decompose(opt, rational, mode, kmax, base);
        }
        if (esv->parsed()) return run_es_verify(opt, from, to, cert_path, class_bound);
        if (escl->parsed()) return run_es_classes(opt, modulus);
        if (escnt->parsed()) return run_es_count(opt, fn, multiset_count);
        if (essol->parsed()) return run_es_solve(opt, sm, sn);
        if (cene->parsed()) return run_census_enumerate(opt, cf);
        if (cenc->parsed()) return run_census_count(opt, cf);
        if (cens->parsed()) return run_census_subset(opt, subset_list, node_budget);
        if (ceni->parsed()) return run_census_interval(opt, in_n, in_c, node_budget);
        if (cenk->parsed()) return run_census_konyagin(opt, kon_n, kon_budget);
        if (huf->parsed()) return run_huffman(opt, ht, hk, hcount, hcodes);
        if (lan->parsed()) return run_landau(opt, lk, lan_nofilter);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

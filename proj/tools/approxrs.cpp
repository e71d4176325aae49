// approxrs: build, query, benchmark and audit approximate rank/select and
// sliding-window suffix-sum structures.
//
// Exit codes: 0 ok, 2 validation/parameter error, 3 range or not-found
// during scripted queries (without --lenient), 4 verification failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "approxrs/approx_bits.hpp"
#include "approxrs/audit.hpp"
#include "approxrs/errors.hpp"
#include "approxrs/multiset.hpp"
#include "approxrs/oracle.hpp"
#include "approxrs/sequence.hpp"
#include "approxrs/serialize.hpp"
#include "approxrs/stream_binary.hpp"
#include "approxrs/stream_integer.hpp"

using namespace approxrs;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRange = 3;
constexpr int kExitVerify = 4;

// ---------- input files ----------

// Packed bit file: 8-byte little-endian bit count, then packed bytes
// (LSB-first within each byte).
std::vector<uint8_t> read_bit_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    in.seekg(0, std::ios::end);
    auto sz = static_cast<uint64_t>(in.tellg());
    in.seekg(0);
    if (sz == 0) return {};
    if (sz < 8) throw ValidationError(path + ": missing bit-count header");
    uint64_t nbits = io::read_u64(in);
    if ((nbits + 7) / 8 != sz - 8) throw ValidationError(path + ": length header mismatch");
    std::vector<uint8_t> packed(sz - 8);
    in.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
    std::vector<uint8_t> bits(nbits);
    for (uint64_t i = 0; i < nbits; ++i) bits[i] = (packed[i / 8] >> (i % 8)) & 1;
    return bits;
}

void write_bit_file(const std::string& path, const std::vector<uint8_t>& bits) {
    std::ofstream out(path, std::ios::binary);
    io::write_u64(out, bits.size());
    std::vector<uint8_t> packed((bits.size() + 7) / 8, 0);
    for (uint64_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) packed[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    }
    out.write(reinterpret_cast<const char*>(packed.data()),
              static_cast<std::streamsize>(packed.size()));
}

std::vector<uint64_t> read_int_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<uint64_t> v;
    uint64_t x;
    while (in >> x) v.push_back(x);
    return v;
}

std::vector<std::pair<uint64_t, uint64_t>> read_pair_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<std::pair<uint64_t, uint64_t>> v;
    uint64_t a, b;
    while (in >> a >> b) v.emplace_back(a, b);
    return v;
}

std::vector<uint32_t> read_symbols(const std::string& path, bool bytes) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<uint32_t> v;
    if (bytes) {
        char c;
        while (in.get(c)) v.push_back(static_cast<uint8_t>(c) + 1u);  // bytes map to 1..256
    } else {
        uint32_t x;
        while (in >> x) v.push_back(x);
    }
    return v;
}

// ---------- structures on disk ----------

struct AnyStructure {
    StructKind kind;
    std::variant<BitVector, SparseBitVector, MarkRankSelect, CountRankSelect, MultisetMarked,
                 MultisetCounts, MultisetBounded, ApproxSequence>
        s;
};

void save_structure(const std::string& path, const AnyStructure& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    io::write_header(out, a.kind);
    std::visit([&](const auto& s) { s.save(out); }, a.s);
}

AnyStructure load_structure(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    StructKind kind = io::read_header(in);
    switch (kind) {
        case StructKind::Plain: return {kind, BitVector::load(in)};
        case StructKind::Sparse: return {kind, SparseBitVector::load(in)};
        case StructKind::MarkRankSelect: return {kind, MarkRankSelect::load(in)};
        case StructKind::CountRankSelect: return {kind, CountRankSelect::load(in)};
        case StructKind::MultisetMarked: return {kind, MultisetMarked::load(in)};
        case StructKind::MultisetCounts: return {kind, MultisetCounts::load(in)};
        case StructKind::MultisetBounded: return {kind, MultisetBounded::load(in)};
        case StructKind::Sequence: return {kind, ApproxSequence::load(in)};
        default: throw ValidationError("unknown structure kind in file");
    }
}

uint64_t structure_space_bits(const AnyStructure& a) {
    return std::visit([](const auto& s) { return s.space_bits(); }, a.s);
}

// ---------- audit helpers ----------

audit::SpaceAuditReport audit_structure(const AnyStructure& a, uint64_t n, uint64_t m,
                                        uint64_t delta, uint64_t ell, uint64_t sigma) {
    audit::SpaceAuditReport r;
    r.kind = kind_name(a.kind);
    r.n = n;
    r.m = m;
    r.delta = delta;
    r.ell = ell;
    r.sigma = sigma;
    r.measured_bits = structure_space_bits(a);
    switch (a.kind) {
        case StructKind::Plain:
            r.upper_formula_bits = static_cast<double>(n);
            r.lower_formula_bits = static_cast<double>(n);
            break;
        case StructKind::Sparse:
            r.upper_formula_bits = audit::binomial_bits(n, m);
            r.lower_formula_bits = audit::binomial_bits(n, m);
            r.representation_substituted = true;
            break;
        case StructKind::MarkRankSelect:
            r.upper_formula_bits = audit::ub_mark_bits(n, delta);
            r.lower_formula_bits = audit::lb_mark_bits(n, delta);
            r.representation_substituted = std::get<MarkRankSelect>(a.s).sparse_backed();
            break;
        case StructKind::CountRankSelect:
            r.upper_formula_bits = audit::ub_count_bits(n, delta);
            r.lower_formula_bits = audit::lb_count_bits(n, delta);
            break;
        case StructKind::MultisetMarked:
        case StructKind::MultisetCounts:
            r.upper_formula_bits = audit::ub_mark_bits(n + m, delta);
            r.lower_formula_bits = audit::lb_mark_bits(n + m, delta);
            r.representation_substituted = true;
            break;
        case StructKind::MultisetBounded:
            r.upper_formula_bits = 2 * audit::lb_bounded_freq_bits(n, delta, ell);
            r.lower_formula_bits = audit::lb_bounded_freq_bits(n, delta, ell);
            break;
        case StructKind::Sequence:
            r.upper_formula_bits = audit::ub_sequence_bits(n, delta, sigma);
            r.lower_formula_bits = audit::lb_mark_bits(n, delta) *
                                   std::max(1.0, std::log2(static_cast<double>(sigma)));
            r.representation_substituted = true;  // wavelet backing
            break;
        default: break;
    }
    return r;
}

// ---------- query scripts ----------

struct QueryRow {
    std::string op;
    uint64_t a1 = 0;
    std::optional<uint64_t> a2;
};

std::vector<QueryRow> read_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<QueryRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        QueryRow r;
        if (!(ls >> r.op >> r.a1)) continue;
        uint64_t x;
        if (ls >> x) r.a2 = x;
        rows.push_back(r);
    }
    return rows;
}

struct QueryContext {
    const AnyStructure& st;
    const std::vector<uint8_t>* raw_bits = nullptr;
    const std::vector<uint64_t>* raw_freqs = nullptr;
    const std::vector<uint32_t>* raw_seq = nullptr;
};

// Runs one scripted query; returns (value, verdict-if-verifying).
std::pair<uint64_t, oracle::Verdict> run_query(const QueryContext& ctx, const QueryRow& q,
                                               bool verify) {
    oracle::Verdict v{true, {}};
    uint64_t value = 0;
    auto need = [&](bool have, const char* what) {
        if (verify && !have) throw ValidationError(std::string("--verify needs the original ") + what);
    };
    if (auto* bv = std::get_if<BitVector>(&ctx.st.s)) {
        uint64_t b = q.op.back() == '0' ? 0 : 1;
        if (q.op == "rank" || q.op == "rank1" || q.op == "rank0") value = bv->rank(b, q.a1);
        else if (q.op == "select" || q.op == "select1" || q.op == "select0") value = bv->select(b, q.a1);
        else if (q.op == "access") value = bv->access(q.a1);
        else throw ValidationError("unknown op for plain vector: " + q.op);
        if (verify) {
            need(ctx.raw_bits, "bit input");
            bool ok = q.op.substr(0, 4) == "rank" ? value == oracle::rank(*ctx.raw_bits, b, q.a1)
                      : q.op.substr(0, 6) == "select"
                          ? value == oracle::select(*ctx.raw_bits, b, q.a1)
                          : true;
            v = {ok, ok ? "" : "exact mismatch"};
        }
    } else if (auto* sv = std::get_if<SparseBitVector>(&ctx.st.s)) {
        uint64_t b = q.op.back() == '0' ? 0 : 1;
        if (q.op.substr(0, 4) == "rank") value = sv->rank(b, q.a1);
        else if (q.op.substr(0, 6) == "select") value = sv->select(b, q.a1);
        else throw ValidationError("unknown op for sparse vector: " + q.op);
        if (verify) {
            need(ctx.raw_bits, "bit input");
            bool ok = q.op.substr(0, 4) == "rank" ? value == oracle::rank(*ctx.raw_bits, b, q.a1)
                                                  : value == oracle::select(*ctx.raw_bits, b, q.a1);
            v = {ok, ok ? "" : "exact mismatch"};
        }
    } else if (auto* ms = std::get_if<MarkRankSelect>(&ctx.st.s)) {
        if (q.op == "dranka") value = ms->rank_est(q.a1);
        else if (q.op == "selecta") value = ms->select_est(q.a1);
        else throw ValidationError("unknown op for drank-select: " + q.op);
        if (verify) {
            need(ctx.raw_bits, "bit input");
            v = q.op == "dranka"
                    ? oracle::validate_drank(*ctx.raw_bits, ms->delta(), q.a1, value)
                    : oracle::validate_select(*ctx.raw_bits, ms->delta(), q.a1, value);
        }
    } else if (auto* cs = std::get_if<CountRankSelect>(&ctx.st.s)) {
        if (q.op == "ranka") value = cs->rank_est(q.a1);
        else if (q.op == "dselecta") value = cs->select_est(q.a1);
        else throw ValidationError("unknown op for rank-dselect: " + q.op);
        if (verify) {
            need(ctx.raw_bits, "bit input");
            v = q.op == "ranka"
                    ? oracle::validate_rank(*ctx.raw_bits, cs->delta(), q.a1, value)
                    : oracle::validate_dselect(*ctx.raw_bits, cs->delta(), q.a1, value);
        }
    } else if (auto* mm = std::get_if<MultisetMarked>(&ctx.st.s)) {
        if (q.op == "dranka") value = mm->rank_est(q.a1);
        else if (q.op == "selecta") value = mm->select_est(q.a1);
        else throw ValidationError("unknown op for ms-fixed: " + q.op);
        if (verify) {
            need(ctx.raw_freqs, "frequency input");
            v = q.op == "dranka"
                    ? oracle::validate_ms_drank(*ctx.raw_freqs, mm->delta(), q.a1, value)
                    : oracle::validate_ms_select(*ctx.raw_freqs, mm->delta(), q.a1, value);
        }
    } else if (auto* mc = std::get_if<MultisetCounts>(&ctx.st.s)) {
        if (q.op == "ranka") value = mc->rank_est(q.a1);
        else if (q.op == "dselecta") value = mc->select_est(q.a1);
        else throw ValidationError("unknown op for ms-counts: " + q.op);
        if (verify) {
            need(ctx.raw_freqs, "frequency input");
            v = q.op == "ranka"
                    ? oracle::validate_ms_rank(*ctx.raw_freqs, mc->delta(), q.a1, value)
                    : oracle::validate_ms_dselect(*ctx.raw_freqs, mc->delta(), q.a1, value);
        }
    } else if (auto* mb = std::get_if<MultisetBounded>(&ctx.st.s)) {
        if (q.op == "dranka") value = mb->rank_est(q.a1);
        else if (q.op == "selecta") value = mb->select_est(q.a1);
        else throw ValidationError("unknown op for ms-bounded: " + q.op);
        if (verify) {
            need(ctx.raw_freqs, "frequency input");
            if (q.op == "dranka") {
                v = oracle::validate_ms_drank(*ctx.raw_freqs, mb->delta(), q.a1, value);
            } else if (mb->dense_mode()) {
                v = oracle::validate_ms_select(*ctx.raw_freqs, mb->delta(), q.a1, value);
            } else {
                v = oracle::validate_ms_select_span(*ctx.raw_freqs, mb->delta(), mb->select_mu(),
                                                    q.a1, value);
            }
        }
    } else if (auto* sq = std::get_if<ApproxSequence>(&ctx.st.s)) {
        if (!q.a2) throw ValidationError("sequence ops need: op symbol position");
        uint32_t sym = static_cast<uint32_t>(q.a1);
        if (q.op == "dranka") value = sq->rank_est(sym, *q.a2);
        else if (q.op == "selecta") value = sq->select_est(sym, *q.a2);
        else throw ValidationError("unknown op for seq: " + q.op);
        if (verify) {
            need(ctx.raw_seq, "symbol input");
            v = q.op == "dranka"
                    ? oracle::validate_seq_drank(*ctx.raw_seq, sym, sq->delta(), *q.a2, value)
                    : oracle::validate_seq_select(*ctx.raw_seq, sym, sq->delta(), *q.a2, value);
        }
    }
    return {value, v};
}

// ---------- bench ----------

struct BenchCell {
    std::string kind;
    uint64_t n, delta, ell;
};

struct LatencyStats {
    double p50 = 0, p99 = 0;
};

LatencyStats percentile(std::vector<double>& ns) {
    std::sort(ns.begin(), ns.end());
    LatencyStats s;
    if (ns.empty()) return s;
    s.p50 = ns[ns.size() / 2];
    s.p99 = ns[std::min(ns.size() - 1, ns.size() * 99 / 100)];
    return s;
}

template <typename F>
LatencyStats time_op(uint64_t samples, uint64_t batch, F&& f) {
    std::vector<double> lat;
    lat.reserve(samples);
    for (uint64_t s = 0; s < samples; ++s) {
        auto t0 = std::chrono::steady_clock::now();
        for (uint64_t b = 0; b < batch; ++b) f(s * batch + b);
        auto t1 = std::chrono::steady_clock::now();
        lat.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                      static_cast<double>(batch));
    }
    return percentile(lat);
}

std::string bench_cell(const BenchCell& c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::ostringstream row;
    double build_ms = 0;
    auto timed_build = [&](auto&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = f();
        build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
    uint64_t space = 0;
    double formula = 0;
    LatencyStats q{}, push{};
    volatile uint64_t sink = 0;
    if (c.kind == "drank-select" || c.kind == "rank-dselect") {
        std::vector<uint8_t> bits(c.n);
        for (auto& b : bits) b = rng() & 1;
        if (c.kind == "drank-select") {
            auto s = timed_build([&] { return MarkRankSelect::build(bits, c.delta); });
            space = s.space_bits();
            formula = audit::ub_mark_bits(c.n, c.delta);
            q = time_op(4096, 32, [&](uint64_t k) { sink += s.rank_est(1 + (k * 2654435761u) % c.n); });
            auto qs = time_op(4096, 32, [&](uint64_t k) {
                sink += s.select_est(1 + (k * 40503u) % s.ones());
            });
            q.p50 = std::max(q.p50, qs.p50);
            q.p99 = std::max(q.p99, qs.p99);
        } else {
            auto s = timed_build([&] { return CountRankSelect::build(bits, c.delta); });
            space = s.space_bits();
            formula = audit::ub_count_bits(c.n, c.delta);
            q = time_op(4096, 32, [&](uint64_t k) { sink += s.rank_est(1 + (k * 2654435761u) % c.n); });
        }
    } else if (c.kind == "stream-bin") {
        auto w = timed_build([&] {
            BinaryWindowApprox w0(c.n, c.delta);
            for (uint64_t i = 0; i < c.n + c.n / 2; ++i) w0.push(rng() & 1);
            return w0;
        });
        space = w.space_bits();
        formula = audit::ub_binary_window_bits(c.n, c.delta);
        push = time_op(4096, 32, [&](uint64_t k) { w.push(k & 1); });
        q = time_op(4096, 32, [&](uint64_t k) {
            sink += static_cast<uint64_t>(w.ss_est(1 + (k * 2654435761u) % c.n));
        });
    } else if (c.kind == "sketch") {
        auto w = timed_build([&] {
            WindowSumSketch w0(c.n, c.ell, c.delta);
            for (uint64_t i = 0; i < c.n + c.n / 2; ++i) w0.add(rng() % (c.ell + 1));
            return w0;
        });
        space = w.space_bits();
        formula = audit::ub_sketch_bits(c.n, c.delta, c.ell);
        push = time_op(4096, 32, [&](uint64_t k) { w.add(k % (c.ell + 1)); });
        q = time_op(4096, 32, [&](uint64_t k) {
            sink += static_cast<uint64_t>(w.query(1 + (k * 2654435761u) % c.n).num);
        });
    } else {
        throw ValidationError("unknown bench kind: " + c.kind);
    }
    row << c.kind << ',' << c.n << ',' << c.delta << ',' << c.ell << ',' << build_ms << ','
        << q.p50 << ',' << q.p99 << ',' << push.p99 << ',' << space << ','
        << (formula > 0 ? space / formula : 0.0);
    return row.str();
}

std::vector<uint64_t> parse_grid(const std::string& csv) {
    std::vector<uint64_t> v;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoull(tok));
    return v;
}

// ---------- stream-sim ----------

struct StreamQuery {
    uint64_t t;
    std::string op;
    uint64_t i;
};

std::vector<StreamQuery> read_stream_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<StreamQuery> qs;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        StreamQuery q;
        if (ls >> q.t >> q.op >> q.i) qs.push_back(q);
    }
    return qs;
}

int cmd_stream_sim(const std::string& kind, uint64_t n, uint64_t delta, uint64_t ell,
                   const std::string& stream_path, const std::string& script_path, bool packed,
                   bool verify, bool lenient, std::ostream& out) {
    auto script = read_stream_script(script_path);
    std::sort(script.begin(), script.end(),
              [](const StreamQuery& a, const StreamQuery& b) { return a.t < b.t; });
    size_t next = 0;
    bool violations = false;
    bool range_errors = false;

    auto run_bit = [&]() {
        std::vector<uint64_t> stream;
        if (packed) {
            for (uint8_t b : read_bit_file(stream_path)) stream.push_back(b);
        } else {
            stream = read_int_lines(stream_path);
        }
        BinaryWindow exact(n);
        BinaryWindowApprox approx(n, delta);
        std::vector<uint64_t> hist;
        out << "t,op,i,value,true,ok\n";
        for (uint64_t t = 1; t <= stream.size(); ++t) {
            bool bit = stream[t - 1] != 0;
            exact.push(bit);
            approx.push(bit);
            hist.push_back(bit);
            for (; next < script.size() && script[next].t == t; ++next) {
                const auto& q = script[next];
                out << t << ',' << q.op << ',' << q.i << ',';
                try {
                    if (q.op == "ss") {
                        uint64_t v = exact.ss(q.i);
                        bool ok = !verify || v == oracle::ss(hist, n, q.i);
                        out << v << ',' << (verify ? std::to_string(oracle::ss(hist, n, q.i)) : "")
                            << ',' << (ok ? 1 : 0) << '\n';
                        violations |= !ok;
                    } else if (q.op == "iss") {
                        uint64_t v = exact.iss(q.i);
                        bool ok = !verify || v == oracle::iss(hist, n, q.i);
                        out << v << ',' << (verify ? std::to_string(oracle::iss(hist, n, q.i)) : "")
                            << ',' << (ok ? 1 : 0) << '\n';
                        violations |= !ok;
                    } else if (q.op == "ssa") {
                        int64_t v = approx.ss_est(q.i);
                        auto ver = verify ? oracle::validate_ss(hist, n, delta, q.i, v)
                                          : oracle::Verdict{true, {}};
                        out << v << ',' << (verify ? std::to_string(oracle::ss(hist, n, q.i)) : "")
                            << ',' << (ver.ok ? 1 : 0) << '\n';
                        violations |= !ver.ok;
                    } else if (q.op == "issa") {
                        uint64_t v = approx.iss_est(q.i);
                        auto ver = verify ? oracle::validate_iss(hist, n, delta, q.i, v)
                                          : oracle::Verdict{true, {}};
                        out << v << ',' << (verify ? std::to_string(oracle::iss(hist, n, q.i)) : "")
                            << ',' << (ver.ok ? 1 : 0) << '\n';
                        violations |= !ver.ok;
                    } else {
                        throw ValidationError("unknown stream op: " + q.op);
                    }
                } catch (const RangeError& e) {
                    out << "error,range," << 0 << '\n';
                    range_errors = true;
                } catch (const NotFoundError& e) {
                    out << "error,notfound," << 0 << '\n';
                    range_errors = true;
                }
            }
        }
    };

    auto run_int = [&]() {
        auto stream = read_int_lines(stream_path);
        IntWindow exact(n, ell);
        WindowSumSketch sketch(n, ell, delta);
        std::vector<uint64_t> hist;
        out << "t,op,i,estimate_num,estimate_den,true_sum,in_envelope\n";
        for (uint64_t t = 1; t <= stream.size(); ++t) {
            exact.push(stream[t - 1]);
            sketch.add(stream[t - 1]);
            hist.push_back(stream[t - 1]);
            for (; next < script.size() && script[next].t == t; ++next) {
                const auto& q = script[next];
                out << t << ',' << q.op << ',' << q.i << ',';
                try {
                    if (q.op == "ss") {
                        uint64_t v = exact.ss(q.i);
                        bool ok = !verify || v == oracle::ss(hist, n, q.i);
                        out << v << ",1," << (verify ? std::to_string(oracle::ss(hist, n, q.i)) : "")
                            << ',' << (ok ? 1 : 0) << '\n';
                        violations |= !ok;
                    } else if (q.op == "ssa") {
                        auto est = sketch.query(q.i);
                        int64_t num;
                        uint64_t den;
                        est.fraction(num, den);
                        uint64_t truth = oracle::ss(hist, n, q.i);
                        bool ok = true;
                        if (verify) {
                            __int128 su = static_cast<__int128>(truth) << est.pow2;
                            __int128 du = static_cast<__int128>(delta) << est.pow2;
                            ok = est.num > su - du && est.num <= su;
                        }
                        out << num << ',' << den << ',' << (verify ? std::to_string(truth) : "")
                            << ',' << (ok ? 1 : 0) << '\n';
                        violations |= !ok;
                    } else if (q.op == "issa") {
                        // binary search over the monotone estimator; lower
                        // end validated non-strictly (integer jumps can
                        // collapse the interval)
                        uint64_t w = sketch.window();
                        __int128 need = (static_cast<__int128>(q.i) - delta) *
                                            (static_cast<__int128>(1) << sketch.round_bits()) +
                                        1;
                        uint64_t lo = 1, hi = w;
                        if (w == 0 || sketch.query(w).num < need)
                            throw NotFoundError("too few in window");
                        while (lo < hi) {
                            uint64_t mid = lo + (hi - lo) / 2;
                            if (sketch.query(mid).num >= need) hi = mid; else lo = mid + 1;
                        }
                        bool ok = true;
                        uint64_t truth = 0;
                        if (verify) {
                            truth = oracle::iss(hist, n, q.i);
                            uint64_t lower =
                                q.i > delta ? oracle::iss(hist, n, q.i - delta) : 0;
                            ok = lo >= lower && lo <= truth;
                        }
                        out << lo << ",1," << (verify ? std::to_string(truth) : "") << ','
                            << (ok ? 1 : 0) << '\n';
                        violations |= !ok;
                    } else {
                        throw ValidationError("unknown stream op: " + q.op);
                    }
                } catch (const RangeError&) {
                    out << "error,range," << 0 << '\n';
                    range_errors = true;
                } catch (const NotFoundError&) {
                    out << "error,notfound," << 0 << '\n';
                    range_errors = true;
                }
            }
        }
    };

    if (kind == "bit") run_bit();
    else if (kind == "int") run_int();
    else throw ValidationError("stream-sim kind must be bit or int");

    if (verify && violations) return kExitVerify;
    if (range_errors && !lenient) return kExitRange;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate rank/select structures and sliding-window suffix sums"};
    app.require_subcommand(1);

    // ---- build ----
    auto* build = app.add_subcommand("build", "build a structure from an input file");
    std::string b_kind, b_input, b_out = "structure.axrs", b_mode = "auto";
    uint64_t b_n = 0, b_delta = 1, b_ell = 1, b_sigma = 0;
    bool b_bytes = false;
    build->add_option("--kind", b_kind, "plain|sparse|drank-select|rank-dselect|ms-fixed|ms-counts|ms-bounded|seq")->required();
    build->add_option("input", b_input, "input file")->required();
    build->add_option("--out", b_out, "output structure file");
    build->add_option("--n", b_n, "universe / length for sparse and multiset inputs");
    build->add_option("--delta", b_delta, "additive error");
    build->add_option("--ell", b_ell, "max element frequency (ms-bounded)");
    build->add_option("--sigma", b_sigma, "alphabet size (seq)");
    build->add_option("--mode", b_mode, "auto|plain|sparse backing for drank-select");
    build->add_flag("--bytes", b_bytes, "treat seq input as a byte string");

    // ---- query ----
    auto* query = app.add_subcommand("query", "run a query script against a structure file");
    std::string q_struct, q_script, q_raw, q_out;
    bool q_verify = false, q_lenient = false;
    query->add_option("structure", q_struct)->required();
    query->add_option("script", q_script)->required();
    query->add_option("raw", q_raw, "original input (required by --verify)");
    query->add_flag("--verify", q_verify, "check each answer against the oracle");
    query->add_flag("--lenient", q_lenient, "range errors do not fail the run");
    query->add_option("--out", q_out, "write CSV here instead of stdout");

    // ---- audit ----
    auto* aud = app.add_subcommand("audit", "space audit: formula mode or measured mode");
    std::string a_formula, a_struct;
    uint64_t a_n = 0, a_m = 0, a_delta = 1, a_ell = 1, a_sigma = 0;
    aud->add_option("--formula", a_formula,
                    "lb-mark|lb-mark-sparse|lb-count|lb-bounded|ub-mark|ub-count|ub-window|ub-seq|ub-sketch");
    aud->add_option("--structure", a_struct, "measure a structure file");
    aud->add_option("--n", a_n);
    aud->add_option("--m", a_m);
    aud->add_option("--delta", a_delta);
    aud->add_option("--ell", a_ell);
    aud->add_option("--sigma", a_sigma);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "latency/space grid benchmark, CSV output");
    std::string be_kind = "drank-select", be_out;
    std::string be_ns = "65536", be_deltas = "64", be_ells = "1";
    uint64_t be_seed = 1;
    bench->add_option("--kind", be_kind, "drank-select|rank-dselect|stream-bin|sketch");
    bench->add_option("--n", be_ns, "comma-separated sizes");
    bench->add_option("--delta", be_deltas, "comma-separated deltas");
    bench->add_option("--ell", be_ells, "comma-separated ells");
    bench->add_option("--seed", be_seed, "workload seed");
    bench->add_option("--out", be_out, "write CSV here instead of stdout");

    // ---- stream-sim ----
    auto* sim = app.add_subcommand("stream-sim", "replay a stream, interleave scripted queries");
    std::string s_kind = "bit", s_stream, s_script, s_out;
    uint64_t s_n = 0, s_delta = 1, s_ell = 1;
    bool s_packed = false, s_verify = false, s_lenient = false;
    sim->add_option("--kind", s_kind, "bit|int");
    sim->add_option("--n", s_n, "window capacity")->required();
    sim->add_option("--delta", s_delta, "additive error");
    sim->add_option("--ell", s_ell, "value bound (int streams)");
    sim->add_option("stream", s_stream)->required();
    sim->add_option("script", s_script)->required();
    sim->add_flag("--packed", s_packed, "stream file is packed bits with a length header");
    sim->add_flag("--verify", s_verify, "emit oracle verdicts; nonzero exit on violation");
    sim->add_flag("--lenient", s_lenient, "range errors do not fail the run");
    sim->add_option("--out", s_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            AnyStructure st{StructKind::Plain, BitVector()};
            uint64_t n = 0, m = 0;
            if (b_kind == "plain") {
                auto bits = read_bit_file(b_input);
                n = bits.size();
                st = {StructKind::Plain, BitVector::from_bits(bits)};
                m = std::get<BitVector>(st.s).count(true);
            } else if (b_kind == "sparse") {
                auto pos = read_int_lines(b_input);
                if (b_n == 0) throw ValidationError("sparse input needs --n");
                n = b_n;
                m = pos.size();
                st = {StructKind::Sparse, SparseBitVector::from_positions(b_n, pos)};
            } else if (b_kind == "drank-select") {
                auto bits = read_bit_file(b_input);
                n = bits.size();
                Backing mode = b_mode == "plain" ? Backing::Plain
                               : b_mode == "sparse" ? Backing::Sparse
                                                    : Backing::Auto;
                auto s = MarkRankSelect::build(bits, b_delta, mode);
                m = s.ones();
                st = {StructKind::MarkRankSelect, std::move(s)};
            } else if (b_kind == "rank-dselect") {
                auto bits = read_bit_file(b_input);
                n = bits.size();
                auto s = CountRankSelect::build(bits, b_delta);
                m = s.ones();
                st = {StructKind::CountRankSelect, std::move(s)};
            } else if (b_kind == "ms-fixed" || b_kind == "ms-counts" || b_kind == "ms-bounded") {
                if (b_n == 0) throw ValidationError("multiset input needs --n");
                auto freqs = normalize_multiset(b_n, read_pair_lines(b_input));
                n = b_n;
                for (auto f : freqs) m += f;
                if (b_kind == "ms-fixed")
                    st = {StructKind::MultisetMarked, MultisetMarked::build(freqs, b_delta)};
                else if (b_kind == "ms-counts")
                    st = {StructKind::MultisetCounts, MultisetCounts::build(freqs, b_delta)};
                else
                    st = {StructKind::MultisetBounded,
                          MultisetBounded::build(freqs, b_delta, b_ell)};
            } else if (b_kind == "seq") {
                auto seq = read_symbols(b_input, b_bytes);
                n = seq.size();
                uint64_t sigma = b_sigma;
                if (sigma == 0) {
                    for (auto s : seq) sigma = std::max<uint64_t>(sigma, s);
                }
                st = {StructKind::Sequence,
                      ApproxSequence::build(seq, static_cast<uint32_t>(sigma), b_delta)};
            } else {
                throw ValidationError("unknown build kind: " + b_kind);
            }
            save_structure(b_out, st);
            std::cout << audit::SpaceAuditReport::csv_header() << '\n'
                      << audit_structure(st, n, m, b_delta, b_ell, b_sigma).csv_row() << '\n';
            return 0;
        }

        if (*query) {
            auto st = load_structure(q_struct);
            auto script = read_script(q_script);
            std::vector<uint8_t> raw_bits;
            std::vector<uint64_t> raw_freqs;
            std::vector<uint32_t> raw_seq;
            QueryContext ctx{st};
            if (!q_raw.empty()) {
                switch (st.kind) {
                    case StructKind::Plain:
                    case StructKind::Sparse:
                    case StructKind::MarkRankSelect:
                    case StructKind::CountRankSelect:
                        raw_bits = read_bit_file(q_raw);
                        ctx.raw_bits = &raw_bits;
                        break;
                    case StructKind::MultisetMarked:
                    case StructKind::MultisetCounts:
                    case StructKind::MultisetBounded: {
                        uint64_t uni = std::visit(
                            [](const auto& s) -> uint64_t {
                                using T = std::decay_t<decltype(s)>;
                                if constexpr (std::is_same_v<T, MultisetMarked> ||
                                              std::is_same_v<T, MultisetCounts> ||
                                              std::is_same_v<T, MultisetBounded>)
                                    return s.universe();
                                else
                                    return 0;
                            },
                            st.s);
                        raw_freqs = normalize_multiset(uni, read_pair_lines(q_raw));
                        ctx.raw_freqs = &raw_freqs;
                        break;
                    }
                    case StructKind::Sequence:
                        raw_seq = read_symbols(q_raw, false);
                        ctx.raw_seq = &raw_seq;
                        break;
                    default: break;
                }
            }
            std::ofstream fout;
            if (!q_out.empty()) fout.open(q_out);
            std::ostream& out = q_out.empty() ? std::cout : fout;
            out << "op,arg1,arg2,value,status" << (q_verify ? ",in_interval,why" : "") << '\n';
            bool violations = false, range_errors = false;
            for (const auto& q : script) {
                out << q.op << ',' << q.a1 << ',' << (q.a2 ? std::to_string(*q.a2) : "") << ',';
                try {
                    auto [value, verdict] = run_query(ctx, q, q_verify);
                    out << value << ",ok";
                    if (q_verify) {
                        out << ',' << (verdict.ok ? 1 : 0) << ',' << verdict.why;
                        violations |= !verdict.ok;
                    }
                    out << '\n';
                } catch (const RangeError&) {
                    out << ",range" << (q_verify ? ",," : "") << '\n';
                    range_errors = true;
                } catch (const NotFoundError&) {
                    out << ",notfound" << (q_verify ? ",," : "") << '\n';
                    range_errors = true;
                }
            }
            if (q_verify && violations) return kExitVerify;
            if (range_errors && !q_lenient) return kExitRange;
            return 0;
        }

        if (*aud) {
            if (!a_formula.empty()) {
                double bits = 0;
                if (a_formula == "lb-mark") bits = audit::lb_mark_bits(a_n, a_delta);
                else if (a_formula == "lb-mark-sparse") bits = audit::lb_mark_bits_sparse(a_n, a_m, a_delta);
                else if (a_formula == "lb-count") bits = audit::lb_count_bits(a_n, a_delta);
                else if (a_formula == "lb-bounded") bits = audit::lb_bounded_freq_bits(a_n, a_delta, a_ell);
                else if (a_formula == "ub-mark") bits = audit::ub_mark_bits(a_n, a_delta);
                else if (a_formula == "ub-count") bits = audit::ub_count_bits(a_n, a_delta);
                else if (a_formula == "ub-window") bits = audit::ub_binary_window_bits(a_n, a_delta);
                else if (a_formula == "ub-seq") bits = audit::ub_sequence_bits(a_n, a_delta, a_sigma);
                else if (a_formula == "ub-sketch") bits = audit::ub_sketch_bits(a_n, a_delta, a_ell);
                else throw ValidationError("unknown formula: " + a_formula);
                std::cout << "formula,n,m,delta,ell,sigma,bits\n"
                          << a_formula << ',' << a_n << ',' << a_m << ',' << a_delta << ','
                          << a_ell << ',' << a_sigma << ',' << bits << '\n';
                return 0;
            }
            if (!a_struct.empty()) {
                auto st = load_structure(a_struct);
                std::cout << audit::SpaceAuditReport::csv_header() << '\n'
                          << audit_structure(st, a_n, a_m, a_delta, a_ell, a_sigma).csv_row()
                          << '\n';
                return 0;
            }
            throw ValidationError("audit needs --formula or --structure");
        }

        if (*bench) {
            std::vector<BenchCell> cells;
            for (uint64_t n : parse_grid(be_ns))
                for (uint64_t d : parse_grid(be_deltas))
                    for (uint64_t l : parse_grid(be_ells)) cells.push_back({be_kind, n, d, l});
            if (cells.empty()) throw ValidationError("bench grid is empty");
            unsigned threads = std::thread::hardware_concurrency();
            if (const char* env = std::getenv("APPROXRS_THREADS")) {
                threads = static_cast<unsigned>(std::stoul(env));
            }
            threads = std::max(1u, std::min<unsigned>(threads, cells.size()));
            std::vector<std::string> rows(cells.size());
            std::vector<std::thread> pool;
            std::atomic<size_t> cursor{0};
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&]() {
                    for (;;) {
                        size_t k = cursor.fetch_add(1);
                        if (k >= cells.size()) break;
                        rows[k] = bench_cell(cells[k], be_seed + k);
                    }
                });
            }
            for (auto& th : pool) th.join();
            std::ofstream fout;
            if (!be_out.empty()) fout.open(be_out);
            std::ostream& out = be_out.empty() ? std::cout : fout;
            out << "kind,n,delta,ell,build_ms,q_p50_ns,q_p99_ns,push_p99_ns,space_bits,space_ratio\n";
            for (const auto& r : rows) out << r << '\n';
            return 0;
        }

        if (*sim) {
            std::ofstream fout;
            if (!s_out.empty()) fout.open(s_out);
            std::ostream& out = s_out.empty() ? std::cout : fout;
            return cmd_stream_sim(s_kind, s_n, s_delta, s_ell, s_stream, s_script, s_packed,
                                  s_verify, s_lenient, out);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return kExitRange;
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

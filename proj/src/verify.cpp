#include <tensorlib/verify.hpp>

#include <tensorlib/algorithm.hpp>
#include <tensorlib/contraction.hpp>
#include <tensorlib/oracle.hpp>
#include <tensorlib/random.hpp>
#include <tensorlib/tensor_view.hpp>

#include <cmath>
#include <functional>
#include <sstream>

namespace tl {

const char* to_string(ScalarKind kind) { return kind == ScalarKind::int64 ? "int64" : "float64"; }

namespace {

using nlohmann::json;
using oracle::Flat;

template <class T>
bool matches(const Flat<T>& got, const Flat<T>& want, double tol) {
    if (got.extents != want.extents || got.values.size() != want.values.size()) return false;
    if constexpr (std::is_integral_v<T>) {
        return got.values == want.values;
    } else {
        double diff = 0, ref = 0;
        for (std::size_t k = 0; k < got.values.size(); ++k) {
            const double d = static_cast<double>(got.values[k]) - static_cast<double>(want.values[k]);
            diff += d * d;
            ref += static_cast<double>(want.values[k]) * static_cast<double>(want.values[k]);
        }
        if (!std::isfinite(diff)) return false;
        return std::sqrt(diff) <= tol * std::sqrt(ref);
    }
}

template <class T>
bool matches(T got, T want, double tol) {
    return matches(Flat<T>{{1}, {got}}, Flat<T>{{1}, {want}}, tol);
}

template <class T>
Flat<T> flat(const Operand<T>& op) {
    return op.visit([](const auto& s) { return oracle::flatten(s); });
}

template <class T>
json operand_json(const Operand<T>& op) {
    json j;
    j["tensor"] = to_json(op.target());
    if (op.ranges()) {
        json ranges = json::array();
        for (const auto& r : *op.ranges()) ranges.push_back({r.first(), r.step(), r.last()});
        j["ranges"] = ranges;
    } else {
        j["ranges"] = nullptr;
    }
    return j;
}

template <class T>
json flat_json(const Flat<T>& f) {
    return {{"extents", f.extents}, {"values", f.values}};
}

// Writes `values` (colexicographic) into the operand through multi-index access.
template <class T>
void store(Operand<T>& op, const Flat<T>& values) {
    op.visit_mut([&](auto&& s) {
        std::vector<std::size_t> idx(s.order(), 0);
        std::vector<index_t> biased(s.order());
        std::size_t k = 0;
        do {
            for (std::size_t r = 0; r < idx.size(); ++r) biased[r] = static_cast<index_t>(idx[r]) + s.offsets()[r];
            s.at(std::span<const index_t>(biased)) = values.values[k++];
        } while (oracle::next_index(idx, values.extents));
    });
}

template <class T>
TensorView<const T> as_view(const Operand<T>& op) {
    if (op.ranges()) return op.target().view(std::span<const Range>(*op.ranges()));
    return op.target().view(std::vector<Range>(op.target().order(), Range::all()));
}

struct Ctx {
    Rng& rng;
    const VerifyConfig& cfg;
    json& cex;

    std::vector<std::size_t> extents(std::size_t min_order = 1) {
        const auto p = static_cast<std::size_t>(
            rng.uniform_int(static_cast<std::int64_t>(min_order), static_cast<std::int64_t>(cfg.max_order)));
        return rng.extents(p, cfg.max_extent);
    }
    std::size_t pick(std::size_t lo, std::size_t hi) {
        return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    }
};

template <class T>
T unary_op(T x) {
    return x * T(2) + T(1);
}

// ---- first-level algorithms --------------------------------------------

template <class T>
bool check_for_each(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    c.cex["operand"] = operand_json(op);
    auto want = flat(op);
    for (auto& x : want.values) x = unary_op(x);
    std::size_t calls = 0;
    op.visit_mut([&](auto&& s) {
        tl::for_each(s.mbegin(), [&calls](T& x) {
            x = unary_op(x);
            ++calls;
        });
    });
    return calls == want.values.size() && matches(flat(op), want, c.cfg.float_tolerance);
}

template <class T>
bool check_transform_unary(Ctx& c) {
    const auto ext = c.extents();
    auto src = random_operand<T>(c.rng, ext);
    auto dst = random_operand<T>(c.rng, ext);
    c.cex["src"] = operand_json(src);
    c.cex["dst"] = operand_json(dst);
    auto want = flat(src);
    for (auto& x : want.values) x = unary_op(x);
    dst.visit_mut([&](auto&& d) { src.visit([&](const auto& s) { tl::transform(s.mbegin(), d.mbegin(), unary_op<T>); }); });
    return matches(flat(dst), want, c.cfg.float_tolerance);
}

template <class T>
bool check_transform_binary(Ctx& c) {
    const auto ext = c.extents();
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, ext);
    auto dst = random_operand<T>(c.rng, ext);
    const auto which = c.rng.below(3);
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    c.cex["op"] = which;
    auto fn = [which](T x, T y) { return which == 0 ? x + y : (which == 1 ? x - y : x * y); };
    auto fa = flat(a), fb = flat(b), want = fa;
    for (std::size_t k = 0; k < want.values.size(); ++k) want.values[k] = fn(fa.values[k], fb.values[k]);
    dst.visit_mut([&](auto&& d) {
        a.visit([&](const auto& sa) {
            b.visit([&](const auto& sb) { tl::transform(sa.mbegin(), sb.mbegin(), d.mbegin(), fn); });
        });
    });
    return matches(flat(dst), want, c.cfg.float_tolerance);
}

template <class T>
bool check_copy(Ctx& c) {
    const auto ext = c.extents();
    auto src = random_operand<T>(c.rng, ext);
    auto dst = random_operand<T>(c.rng, ext);
    const bool conditional = c.rng.coin();
    c.cex["src"] = operand_json(src);
    c.cex["dst"] = operand_json(dst);
    c.cex["copy_if"] = conditional;
    const auto fs = flat(src);
    auto want = flat(dst);
    auto pred = [](T x) { return x > T(0); };
    for (std::size_t k = 0; k < want.values.size(); ++k)
        if (!conditional || pred(fs.values[k])) want.values[k] = fs.values[k];
    dst.visit_mut([&](auto&& d) {
        src.visit([&](const auto& s) {
            if (conditional)
                tl::copy_if(s.mbegin(), d.mbegin(), pred);
            else
                tl::copy(s.mbegin(), d.mbegin());
        });
    });
    return matches(flat(dst), want, c.cfg.float_tolerance);
}

template <class T>
bool check_fill_generate_iota(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    const auto mode = c.rng.below(3);
    const T v = c.rng.value<T>();
    c.cex["operand"] = operand_json(op);
    c.cex["mode"] = mode == 0 ? "fill" : (mode == 1 ? "generate" : "iota");
    auto want = flat(op);
    for (std::size_t k = 0; k < want.values.size(); ++k)
        want.values[k] = mode == 0 ? v : (mode == 1 ? static_cast<T>(k) : static_cast<T>(v + static_cast<T>(k)));
    op.visit_mut([&](auto&& s) {
        if (mode == 0) {
            tl::fill(s.mbegin(), v);
        } else if (mode == 1) {
            T counter{};
            tl::generate(s.mbegin(), [&counter] { return counter++; });
        } else {
            tl::iota(s.mbegin(), v);
        }
    });
    return matches(flat(op), want, c.cfg.float_tolerance);
}

template <class T>
bool check_count(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    c.cex["operand"] = operand_json(op);
    const auto f = flat(op);
    const T value = f.values[c.rng.below(f.values.size())];
    std::size_t want_count = 0, want_neg = 0;
    for (auto x : f.values) {
        want_count += x == value;
        want_neg += x < T(0);
    }
    return op.visit([&](const auto& s) {
        return tl::count(s.mbegin(), value) == want_count &&
               tl::count_if(s.mbegin(), [](T x) { return x < T(0); }) == want_neg;
    });
}

template <class T>
bool check_extremum(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    c.cex["operand"] = operand_json(op);
    const auto f = flat(op);
    std::size_t kmin = 0, kmax = 0;
    for (std::size_t k = 1; k < f.values.size(); ++k) {
        if (f.values[k] < f.values[kmin]) kmin = k;
        if (f.values[k] > f.values[kmax]) kmax = k;
    }
    return op.visit([&](const auto& s) {
        const auto lo = tl::min_element(s.mbegin());
        const auto hi = tl::max_element(s.mbegin());
        auto at = [&](const std::vector<index_t>& idx) {
            std::vector<std::size_t> u(idx.begin(), idx.end());
            return f.linear(u);
        };
        return lo.value == f.values[kmin] && hi.value == f.values[kmax] && at(lo.index) == kmin &&
               at(hi.index) == kmax;
    });
}

template <class T>
bool check_find(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    c.cex["operand"] = operand_json(op);
    const auto f = flat(op);
    const T value = c.rng.coin() ? f.values[c.rng.below(f.values.size())] : T(100);
    const T threshold = c.rng.value<T>();
    std::optional<std::size_t> want, want_if;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        if (!want && f.values[k] == value) want = k;
        if (!want_if && f.values[k] > threshold) want_if = k;
    }
    auto same = [&](const std::optional<std::vector<index_t>>& got, std::optional<std::size_t> k) {
        if (got.has_value() != k.has_value()) return false;
        if (!got) return true;
        std::vector<std::size_t> u(got->begin(), got->end());
        return f.linear(u) == *k;
    };
    return op.visit([&](const auto& s) {
        return same(tl::find(s.mbegin(), value), want) &&
               same(tl::find_if(s.mbegin(), [threshold](T x) { return x > threshold; }), want_if);
    });
}

template <class T>
bool check_mismatch(Ctx& c) {
    const auto ext = c.extents();
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, ext);
    auto fb = flat(a);
    std::optional<std::size_t> changed;
    if (c.rng.coin()) {
        changed = c.rng.below(fb.values.size());
        fb.values[*changed] += T(1);
    }
    store(b, fb);
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    return a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) {
            const auto got = tl::mismatch(sa.mbegin(), sb.mbegin());
            if (tl::equal(sa.mbegin(), sb.mbegin()) != !changed.has_value()) return false;
            if (got.has_value() != changed.has_value()) return false;
            if (!got) return true;
            std::vector<std::size_t> u(got->begin(), got->end());
            return fb.linear(u) == *changed;
        });
    });
}

template <class T>
bool check_quantifiers(Ctx& c) {
    auto op = random_operand<T>(c.rng, c.extents());
    c.cex["operand"] = operand_json(op);
    const auto f = flat(op);
    const T threshold = c.rng.value<T>() - T(c.rng.coin() ? 0 : 10);
    auto pred = [threshold](T x) { return x > threshold; };
    bool all = true, any = false;
    for (auto x : f.values) {
        all = all && pred(x);
        any = any || pred(x);
    }
    return op.visit([&](const auto& s) {
        return tl::all_of(s.mbegin(), pred) == all && tl::any_of(s.mbegin(), pred) == any &&
               tl::none_of(s.mbegin(), pred) == !any;
    });
}

template <class T>
bool check_accumulate(Ctx& c) {
    const auto ext = c.extents();
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, ext);
    const T init = c.rng.value<T>();
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    const auto fa = flat(a), fb = flat(b);
    T sum = init, dot = init;
    for (std::size_t k = 0; k < fa.values.size(); ++k) {
        sum += fa.values[k];
        dot += fa.values[k] * fb.values[k];
    }
    return a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) {
            return matches(tl::accumulate(sa.mbegin(), init), sum, c.cfg.float_tolerance) &&
                   matches(tl::inner_product(sa.mbegin(), sb.mbegin(), init), dot, c.cfg.float_tolerance);
        });
    });
}

// ---- higher-level operations -------------------------------------------

template <class T>
bool check_transpose(Ctx& c) {
    auto a = random_operand<T>(c.rng, c.extents());
    const auto tau = c.rng.layout(a.target().order()).vec();
    c.cex["a"] = operand_json(a);
    c.cex["tau"] = tau;
    const auto want = oracle::transpose(flat(a), std::span<const std::size_t>(tau));
    const auto got = a.visit([&](const auto& s) { return oracle::flatten(tl::transpose(s, tau)); });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
std::vector<std::size_t> vector_extents(Ctx& c, std::size_t n) {
    switch (c.rng.below(3)) {
    case 0: return {n};
    case 1: return {n, 1};
    default: return {1, n};
    }
}

template <class T>
bool check_ttv(Ctx& c) {
    const auto ext = c.extents();
    const auto m = c.pick(1, ext.size());
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, vector_extents<T>(c, ext[m - 1]));
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    c.cex["mode"] = m;
    const auto want = oracle::ttv(flat(a), flat(b), m);
    auto got = a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) { return oracle::flatten(tl::ttv(sa, sb, m)); });
    });
    if (c.cfg.inject_fault) got.values[0] += T(1);
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
bool check_ttm(Ctx& c) {
    const auto ext = c.extents();
    const auto m = c.pick(1, ext.size());
    const auto rows = c.pick(1, c.cfg.max_extent);
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, {rows, ext[m - 1]});
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    c.cex["mode"] = m;
    const auto want = oracle::ttm(flat(a), flat(b), m);
    const auto got = a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) { return oracle::flatten(tl::ttm(sa, sb, m)); });
    });
    return matches(got, want, c.cfg.float_tolerance);
}

// Random (q, phi, psi) with operand and output orders bounded by max_order.
ContractionSpec random_spec(Ctx& c) {
    const auto pmax = c.cfg.max_order;
    ContractionSpec spec;
    do {
        spec.q = c.pick(0, pmax);
        spec.r = c.pick(0, pmax - spec.q);
        spec.s = c.pick(0, pmax - spec.q);
    } while (spec.q + spec.r == 0 || spec.q + spec.s == 0 || spec.r + spec.s > pmax);
    spec.phi = c.rng.layout(spec.q + spec.r).vec();
    spec.psi = c.rng.layout(spec.q + spec.s).vec();
    return spec;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> spec_extents(Ctx& c, const ContractionSpec& spec) {
    std::vector<std::size_t> ea(spec.q + spec.r), eb(spec.q + spec.s);
    for (std::size_t k = 0; k < spec.r; ++k) ea[spec.phi[k] - 1] = c.pick(1, c.cfg.max_extent);
    for (std::size_t k = 0; k < spec.s; ++k) eb[spec.psi[k] - 1] = c.pick(1, c.cfg.max_extent);
    for (std::size_t k = 0; k < spec.q; ++k) {
        const auto n = c.pick(1, c.cfg.max_extent);
        ea[spec.phi[spec.r + k] - 1] = n;
        eb[spec.psi[spec.s + k] - 1] = n;
    }
    return {ea, eb};
}

template <class T>
bool check_ttt(Ctx& c) {
    const auto spec = random_spec(c);
    const auto [ea, eb] = spec_extents(c, spec);
    auto a = random_operand<T>(c.rng, ea);
    auto b = random_operand<T>(c.rng, eb);
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    c.cex["spec"] = {{"q", spec.q}, {"r", spec.r}, {"s", spec.s}, {"phi", spec.phi}, {"psi", spec.psi}};
    const auto want = oracle::ttt(flat(a), flat(b), spec);
    const auto got = a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) { return oracle::flatten(tl::ttt(sa, sb, spec)); });
    });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
bool check_outer(Ctx& c) {
    const auto pmax = std::max<std::size_t>(c.cfg.max_order, 2);
    const auto pa = c.pick(1, pmax - 1);
    const auto pb = c.pick(1, pmax - pa);
    auto a = random_operand<T>(c.rng, c.rng.extents(pa, c.cfg.max_extent));
    auto b = random_operand<T>(c.rng, c.rng.extents(pb, c.cfg.max_extent));
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    const auto want = oracle::outer(flat(a), flat(b));
    const auto got = a.visit([&](const auto& sa) {
        return b.visit([&](const auto& sb) { return oracle::flatten(tl::outer_product(sa, sb)); });
    });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
bool check_inner(Ctx& c) {
    const auto ext = c.extents();
    auto a = random_operand<T>(c.rng, ext);
    auto b = random_operand<T>(c.rng, ext);
    c.cex["a"] = operand_json(a);
    c.cex["b"] = operand_json(b);
    const auto want = oracle::inner(flat(a), flat(b));
    const auto got =
        a.visit([&](const auto& sa) { return b.visit([&](const auto& sb) { return tl::inner_product(sa, sb); }); });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
bool check_norm(Ctx& c) {
    auto a = random_operand<T>(c.rng, c.extents());
    c.cex["a"] = operand_json(a);
    const auto want = oracle::norm(flat(a));
    const auto got = a.visit([](const auto& s) { return tl::frobenius_norm(s); });
    return matches(got, want, c.cfg.float_tolerance);
}

std::vector<std::size_t> random_modes(Ctx& c, std::size_t p) {
    std::vector<std::size_t> modes;
    while (modes.empty())
        for (std::size_t m = 1; m <= p; ++m)
            if (c.rng.coin()) modes.push_back(m);
    return modes;
}

template <class T>
bool check_times_vectors(Ctx& c) {
    const auto ext = c.extents();
    const auto modes = random_modes(c, ext.size());
    auto a = random_operand<T>(c.rng, ext);
    std::vector<Operand<T>> vecs;
    for (auto m : modes) vecs.push_back(random_operand<T>(c.rng, vector_extents<T>(c, ext[m - 1])));
    c.cex["a"] = operand_json(a);
    c.cex["modes"] = modes;
    for (const auto& v : vecs) c.cex["vectors"].push_back(operand_json(v));

    auto want = flat(a);
    for (std::size_t k = modes.size(); k-- > 0;) want = oracle::ttv(want, flat(vecs[k]), modes[k]);
    std::vector<TensorView<const T>> views;
    for (const auto& v : vecs) views.push_back(as_view(v));
    const auto got = a.visit(
        [&](const auto& s) { return oracle::flatten(tl::times_vectors(s, views, std::span<const std::size_t>(modes))); });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
bool check_times_matrices(Ctx& c) {
    const auto ext = c.extents();
    const auto modes = random_modes(c, ext.size());
    auto a = random_operand<T>(c.rng, ext);
    std::vector<Operand<T>> mats;
    for (auto m : modes) mats.push_back(random_operand<T>(c.rng, {c.pick(1, c.cfg.max_extent), ext[m - 1]}));
    c.cex["a"] = operand_json(a);
    c.cex["modes"] = modes;
    for (const auto& v : mats) c.cex["matrices"].push_back(operand_json(v));

    auto want = flat(a);
    for (std::size_t k = modes.size(); k-- > 0;) want = oracle::ttm(want, flat(mats[k]), modes[k]);
    std::vector<TensorView<const T>> views;
    for (const auto& v : mats) views.push_back(as_view(v));
    const auto got = a.visit([&](const auto& s) {
        return oracle::flatten(tl::times_matrices(s, views, std::span<const std::size_t>(modes)));
    });
    return matches(got, want, c.cfg.float_tolerance);
}

template <class T>
using Check = bool (*)(Ctx&);

template <class T>
struct Family {
    const char* name;
    Check<T> check;
};

template <class T>
std::vector<Family<T>> families() {
    return {
        {"for_each", check_for_each<T>},
        {"transform_unary", check_transform_unary<T>},
        {"transform_binary", check_transform_binary<T>},
        {"copy/copy_if", check_copy<T>},
        {"fill/generate/iota", check_fill_generate_iota<T>},
        {"count/count_if", check_count<T>},
        {"min/max_element", check_extremum<T>},
        {"find/find_if", check_find<T>},
        {"equal/mismatch", check_mismatch<T>},
        {"all/any/none_of", check_quantifiers<T>},
        {"accumulate/inner_product", check_accumulate<T>},
        {"transpose", check_transpose<T>},
        {"ttv", check_ttv<T>},
        {"ttm", check_ttm<T>},
        {"ttt", check_ttt<T>},
        {"outer_product", check_outer<T>},
        {"inner_product_tensors", check_inner<T>},
        {"frobenius_norm", check_norm<T>},
        {"times_vectors", check_times_vectors<T>},
        {"times_matrices", check_times_matrices<T>},
    };
}

std::uint64_t family_seed(std::uint64_t seed, std::size_t family, ScalarKind kind) {
    // splitmix64 finalizer over (seed, family, kind)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (2 * family + (kind == ScalarKind::int64 ? 1 : 2));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

template <class T>
void run_kind(const VerifyConfig& cfg, ScalarKind kind, VerifyReport& report) {
    const auto fams = families<T>();
    for (std::size_t f = 0; f < fams.size(); ++f) {
        FamilyResult result{fams[f].name, kind, 0, 0, std::nullopt};
        Rng rng(family_seed(cfg.seed, f, kind));
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            json cex;
            Ctx ctx{rng, cfg, cex};
            bool ok = false;
            try {
                ok = fams[f].check(ctx);
            } catch (const std::exception& e) {
                cex["exception"] = e.what();
            }
            if (ok) {
                ++result.passed;
            } else {
                ++result.failed;
                if (!result.counterexample) {
                    cex["trial"] = t;
                    result.counterexample = std::move(cex);
                }
            }
        }
        report.families.push_back(std::move(result));
    }
}

} // namespace

std::vector<std::string> verify_family_names() {
    std::vector<std::string> names;
    for (const auto& f : families<std::int64_t>()) names.emplace_back(f.name);
    return names;
}

VerifyReport run_verification(const VerifyConfig& config) {
    if (config.trials < 1) throw argument_error("verify: trials must be >= 1");
    if (config.max_order < 1 || config.max_order > 6) throw argument_error("verify: max_order must be in [1, 6]");
    if (config.max_extent < 1) throw argument_error("verify: max_extent must be >= 1");
    VerifyReport report;
    for (auto kind : config.kinds) {
        if (kind == ScalarKind::int64)
            run_kind<std::int64_t>(config, kind, report);
        else
            run_kind<double>(config, kind, report);
    }
    return report;
}

bool VerifyReport::ok() const {
    return std::ranges::all_of(families, [](const FamilyResult& f) { return f.failed == 0; });
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    std::size_t failed_families = 0;
    for (const auto& f : families) {
        out << (f.failed == 0 ? "PASS " : "FAIL ") << f.name << " [" << to_string(f.kind) << "] " << f.passed << "/"
            << (f.passed + f.failed) << " passed\n";
        if (f.counterexample) out << "  counterexample: " << f.counterexample->dump() << "\n";
        failed_families += f.failed > 0;
    }
    if (failed_families == 0)
        out << "all " << families.size() << " checks passed\n";
    else
        out << failed_families << " of " << families.size() << " checks failed\n";
    return out.str();
}

nlohmann::json VerifyReport::to_json() const {
    json j = json::array();
    for (const auto& f : families) {
        json e{{"family", f.name}, {"scalar", to_string(f.kind)}, {"passed", f.passed}, {"failed", f.failed}};
        if (f.counterexample) e["counterexample"] = *f.counterexample;
        j.push_back(std::move(e));
    }
    return {{"ok", ok()}, {"families", j}};
}

} // namespace tl

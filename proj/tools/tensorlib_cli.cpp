// tensorlib command-line tool: demos, randomized verification against the
// brute-force oracle, MATLAB script emission and rank-one approximation.

#include <tensorlib/contraction.hpp>
#include <tensorlib/hopm.hpp>
#include <tensorlib/json_io.hpp>
#include <tensorlib/matlab.hpp>
#include <tensorlib/random.hpp>
#include <tensorlib/tensor.hpp>
#include <tensorlib/tensor_view.hpp>
#include <tensorlib/verify.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit : int { ok = 0, verification_failed = 1, not_converged = 2, degenerate = 3, usage = 64 };

struct Options {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t max_order = 4;
    std::size_t max_extent = 5;
    std::optional<tl::ScalarKind> scalar;
    std::string in;
    std::string out;
    std::string name = "A";
    std::size_t sweeps = 50;
    double tol = 1e-10;
    bool json = false;
    bool inject_fault = false;
    std::string demo;
};

template <class Seq>
std::string tuple(const Seq& seq) {
    std::string s = "{";
    bool first = true;
    for (const auto& x : seq) {
        s += (first ? "" : ",") + tl::format_scalar(x);
        first = false;
    }
    return s + "}";
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

int cmd_verify(const Options& o) {
    tl::VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.max_order = o.max_order;
    cfg.max_extent = o.max_extent;
    if (o.scalar) cfg.kinds = {*o.scalar};
    cfg.inject_fault = o.inject_fault;
    const auto report = tl::run_verification(cfg);
    write_output(o.out, o.json ? report.to_json().dump(2) + "\n" : report.text());
    return report.ok() ? ok : verification_failed;
}

template <class T>
std::string emit_script(const nlohmann::json& doc, const std::string& name) {
    const auto t = tl::tensor_from_json<T>(doc);
    tl::MatlabScript script;
    script.emit_tensor(t, name);
    return script.str();
}

int cmd_emit(const Options& o) {
    const auto doc = tl::read_json_file(o.in);
    const auto kind = o.scalar.value_or(tl::detect_kind(doc));
    const auto text = kind == tl::ScalarKind::int64 ? emit_script<std::int64_t>(doc, o.name)
                                                    : emit_script<double>(doc, o.name);
    write_output(o.out, text);
    return ok;
}

int cmd_hopm(const Options& o) {
    tl::Tensor<double> a{tl::Shape{1}};
    if (!o.in.empty()) {
        a = tl::tensor_from_json<double>(tl::read_json_file(o.in));
    } else {
        tl::Rng rng(o.seed);
        const auto p = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(o.max_order)));
        a = tl::random_tensor<double>(rng, rng.extents(p, o.max_extent));
    }

    tl::HopmState<double> state;
    try {
        state = tl::hopm(a, tl::HopmOptions{o.sweeps, o.tol});
    } catch (const tl::degenerate_error& e) {
        std::cerr << "tensorlib hopm: " << e.what() << "\n";
        return degenerate;
    }

    std::ostringstream out;
    if (o.json) {
        nlohmann::json j;
        j["lambda"] = state.lambda_history;
        j["residual"] = state.residual_history;
        j["sweeps"] = state.sweeps;
        j["converged"] = state.converged;
        for (const auto& u : state.u) j["u"].push_back(std::vector<double>(u.data().begin(), u.data().end()));
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < state.sweeps; ++k)
            out << "sweep " << k + 1 << " lambda " << tl::format_scalar(state.lambda_history[k]) << " residual "
                << tl::format_scalar(state.residual_history[k]) << "\n";
        out << (state.converged ? "converged" : "not converged") << " after " << state.sweeps << " sweeps\n";
        out << "lambda " << tl::format_scalar(state.lambda()) << "\n";
        out << "residual " << tl::format_scalar(state.residual_history.back()) << "\n";
        for (std::size_t r = 0; r < state.u.size(); ++r) out << "u" << r + 1 << " " << tuple(state.u[r].data()) << "\n";
    }
    write_output(o.out, out.str());
    return state.converged ? ok : not_converged;
}

std::string demo_strides() {
    std::ostringstream out;
    const tl::Shape n{4, 2, 3};
    out << "shape " << tuple(n.extents()) << "\n";
    for (const auto& layout : {tl::first_order_layout(3), tl::last_order_layout(3)})
        out << "layout " << tuple(layout.vec()) << " -> strides " << tuple(tl::compute_strides(n, layout).vec())
            << "\n";
    return out.str();
}

std::string demo_views() {
    std::ostringstream out;
    tl::Tensor<std::int64_t> a{tl::Shape{4, 2, 3}};
    std::iota(a.data().begin(), a.data().end(), 0);
    const auto v = a.view({tl::Range(1, 2, 3), tl::Range(0, 1, 1), tl::Range(2)});
    out << "target shape " << tuple(a.extents()) << " strides " << tuple(a.strides().vec())
        << ", elements hold their memory index\n";
    out << "ranges (1,2,3) (0,1,1) (2)\n";
    out << "view shape " << tuple(v.extents()) << " strides " << tuple(v.strides()) << " gamma " << v.gamma() << "\n";
    out << "view elements " << tl::matlab_literal(v) << "\n";
    return out.str();
}

std::string demo_iterators() {
    std::ostringstream out;
    tl::Tensor<float> a{tl::Shape{4, 3, 2}};
    out << "shape " << tuple(a.extents()) << " strides " << tuple(a.strides().vec()) << "\n";
    out << "fiber (0,i,0) along dimension 2 visits memory indices";
    for (auto f = a.begin(2), l = a.end(2); f != l; ++f) out << " " << f.position();
    out << "\n";
    std::fill(a.begin(2), a.end(2), 5.0f);
    out << "after std::fill(A.begin(2), A.end(2), 5): " << tl::matlab_literal(a) << "\n";
    return out.str();
}

std::string demo_ttv() {
    std::ostringstream out;
    tl::Tensor<std::int64_t> a{tl::Shape{4, 3, 2}};
    std::iota(a.data().begin(), a.data().end(), 0);
    auto b = tl::make_tensor<std::int64_t>(tl::Shape{3}, {1, 1, 1});
    const auto c = tl::ttv(a, b, 2);
    out << "A " << tuple(a.extents()) << " x_2 b " << tuple(b.extents()) << " -> C " << tuple(c.extents()) << "\n";
    out << "C = " << tl::matlab_literal(c) << "\n";
    return out.str();
}

std::string demo_ttt() {
    std::ostringstream out;
    tl::Tensor<std::int64_t> a{tl::Shape{4, 3, 2}};
    std::iota(a.data().begin(), a.data().end(), 0);
    tl::Tensor<std::int64_t> b{tl::Shape{3, 5}};
    b.fill(1);
    const tl::ContractionSpec spec{1, 2, 1, {1, 3, 2}, {2, 1}};
    const auto c = tl::ttt(a, b, spec);
    out << "A " << tuple(a.extents()) << " contracted with B " << tuple(b.extents())
        << " over A dimension 2 and B dimension 1 (q=1, phi={1,3,2}, psi={2,1}) -> C " << tuple(c.extents()) << "\n";
    const auto outer = tl::outer_product(b, b);
    out << "outer product B o B -> " << tuple(outer.extents()) << "\n";
    out << "inner product <A, A> = " << tl::inner_product(a, a) << "\n";
    return out.str();
}

int cmd_demo(const Options& o) {
    std::string text;
    if (o.demo == "strides") text = demo_strides();
    else if (o.demo == "views") text = demo_views();
    else if (o.demo == "iterators") text = demo_iterators();
    else if (o.demo == "ttv") text = demo_ttv();
    else text = demo_ttt();
    write_output(o.out, text);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensorlib: dense tensors with runtime order, offsets and layout"};
    app.require_subcommand(1);
    Options o;

    const std::map<std::string, tl::ScalarKind> kinds{{"int64", tl::ScalarKind::int64},
                                                       {"float64", tl::ScalarKind::float64}};
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "Random seed")->envname("TENSORLIB_SEED");
    };
    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--max-order", o.max_order, "Largest tensor order")->check(CLI::Range(1, 6));
        cmd->add_option("--max-extent", o.max_extent, "Largest dimension extent")->check(CLI::PositiveNumber);
    };
    auto add_scalar = [&](CLI::App* cmd) {
        cmd->add_option("--scalar", o.scalar, "Scalar type")->transform(CLI::CheckedTransformer(kinds));
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Output file (default: stdout)"); };

    auto* verify = app.add_subcommand("verify", "Compare every operation against the brute-force oracle");
    add_seed(verify);
    verify->add_option("--trials", o.trials, "Trials per operation family")->check(CLI::PositiveNumber);
    add_shape(verify);
    add_scalar(verify);
    add_out(verify);
    verify->add_flag("--json", o.json, "JSON report");
    verify->add_flag("--inject-fault", o.inject_fault)->group("");

    auto* emit = app.add_subcommand("emit", "Write a MATLAB script for a JSON tensor");
    emit->add_option("--in", o.in, "JSON tensor")->required();
    add_out(emit);
    emit->add_option("--name", o.name, "MATLAB variable name");
    add_scalar(emit);

    auto* hopm = app.add_subcommand("hopm", "Best rank-one approximation by the higher-order power method");
    hopm->add_option("--in", o.in, "JSON tensor (default: random tensor from --seed)");
    add_seed(hopm);
    add_shape(hopm);
    hopm->add_option("--sweeps", o.sweeps, "Maximum number of sweeps")->check(CLI::PositiveNumber);
    hopm->add_option("--tol", o.tol, "Convergence tolerance on lambda")->check(CLI::NonNegativeNumber);
    add_out(hopm);
    hopm->add_flag("--json", o.json, "JSON report");

    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->add_option("which", o.demo, "strides | views | iterators | ttv | ttt")
        ->required()
        ->check(CLI::IsMember({"strides", "views", "iterators", "ttv", "ttt"}));
    add_out(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*verify) return cmd_verify(o);
        if (*emit) return cmd_emit(o);
        if (*hopm) return cmd_hopm(o);
        return cmd_demo(o);
    } catch (const std::exception& e) {
        // Malformed or unreadable input and invalid parameters.
        std::cerr << "tensorlib: " << e.what() << "\n";
        return usage;
    }
}

// iepg — construct symmetric matrices with a prescribed spectrum whose
// nonzero pattern realizes a clique-plus-cluster graph, and verify them.
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iepg/cli.hpp"
#include "iepg/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"symmetric matrix realizations with prescribed spectra over clique-plus-cluster patterns"};
    app.require_subcommand(1);

    iepg::JobConfig cfg;
    std::string spectrum_raw, mus_raw, lambda1_raw, signs_raw, u_raw, format = "json";
    std::vector<std::string> pin_raw;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output_path, "write the result to this file instead of stdout");
        sub->add_option("--format", format, "output format: json (default) or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--spec-tol", cfg.tol.spec_tol, "relative eigenvalue tolerance");
        sub->add_option("--zero-tol", cfg.tol.zero_tol, "pattern zero threshold");
        sub->add_option("--rank-tol", cfg.tol.rank_tol, "singular-value threshold for nullity");
    };

    std::map<const CLI::App*, iepg::Command> dispatch;

    auto* rc = app.add_subcommand("realize-complete",
                                  "matrix over the complete graph with the given spectrum");
    rc->add_option("--spectrum", spectrum_raw, "target spectrum, e.g. \"7,1,-3^2\"")->required();
    rc->add_option("--pin", pin_raw, "pin a diagonal value, position:value (repeatable)");
    add_common(rc);
    dispatch[rc] = iepg::Command::realize_complete;

    auto* rb = app.add_subcommand("realize-bordered",
                                  "bordered (star-pattern) matrix from interlacing data");
    rb->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    rb->add_option("--mus", mus_raw, "inner diagonal values, comma separated")->required();
    rb->add_option("--signs", signs_raw, "border signs, e.g. \"-,+,-\"");
    add_common(rb);
    dispatch[rb] = iepg::Command::realize_bordered;

    auto* rcc = app.add_subcommand("realize-clique-cluster",
                                   "clique of order k plus an independent cluster on n-k vertices");
    rcc->add_option("--n", cfg.n, "graph order")->required();
    rcc->add_option("--k", cfg.k, "clique order")->required();
    rcc->add_option("--r", cfg.r, "attachment size |S|")->required();
    rcc->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    rcc->add_option("--mus", mus_raw, "override the inner diagonal values");
    rcc->add_option("--lambda1", lambda1_raw, "override the partition selection");
    rcc->add_option("--signs", signs_raw, "override the border signs");
    rcc->add_option("--u-sign", cfg.overrides.u_sign, "glue vector orientation, +1 or -1");
    add_common(rcc);
    dispatch[rcc] = iepg::Command::realize_clique_cluster;

    auto* rkc = app.add_subcommand("realize-cluster-clique",
                                   "same family with the cluster carrying a clique");
    rkc->add_option("--n", cfg.n, "graph order")->required();
    rkc->add_option("--k", cfg.k, "clique order")->required();
    rkc->add_option("--r", cfg.r, "attachment size |S|")->required();
    rkc->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    rkc->add_option("--lambda1", lambda1_raw, "override the partition selection");
    rkc->add_option("--u-sign", cfg.overrides.u_sign, "glue vector orientation, +1 or -1");
    add_common(rkc);
    dispatch[rkc] = iepg::Command::realize_cluster_clique;

    auto* rke = app.add_subcommand("realize-kn-minus-e", "complete graph minus one edge");
    rke->add_option("--n", cfg.n, "graph order")->required();
    rke->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    rke->add_option("--mus", mus_raw, "override the inner diagonal values");
    rke->add_option("--lambda1", lambda1_raw, "override the partition selection (n >= 4)");
    rke->add_option("--signs", signs_raw, "override the border signs");
    add_common(rke);
    dispatch[rke] = iepg::Command::realize_kn_minus_e;

    auto* rj = app.add_subcommand("realize-join",
                                  "K_i joined to (K_j union K_{n-i-j})");
    rj->add_option("--n", cfg.n, "graph order")->required();
    rj->add_option("--i", cfg.i, "join clique order (attachment size)")->required();
    rj->add_option("--j", cfg.j, "first component order (cluster size)")->required();
    rj->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    rj->add_option("--lambda1", lambda1_raw, "override the partition selection");
    rj->add_option("--u-sign", cfg.overrides.u_sign, "glue vector orientation, +1 or -1");
    add_common(rj);
    dispatch[rj] = iepg::Command::realize_join;

    auto* gl = app.add_subcommand("glue", "glue two matrix files along a shared eigenpair");
    gl->add_option("--a", cfg.a_path, "matrix whose corner entry is the shared eigenvalue")->required();
    gl->add_option("--b", cfg.b_path, "matrix owning the eigenvector")->required();
    gl->add_option("--u", u_raw, "unit eigenvector of --b, comma separated")->required();
    add_common(gl);
    dispatch[gl] = iepg::Command::glue;

    auto* vf = app.add_subcommand("verify", "re-verify an existing matrix file");
    vf->add_option("--matrix", cfg.matrix_path, "matrix JSON file")->required();
    vf->add_option("--graph", cfg.graph_path, "target graph JSON file")->required();
    vf->add_option("--spectrum", spectrum_raw, "target spectrum")->required();
    add_common(vf);
    dispatch[vf] = iepg::Command::verify;

    auto* dt = app.add_subcommand("detect", "list the clusters of a graph file");
    dt->add_option("--graph", cfg.graph_path, "graph JSON file")->required();
    add_common(dt);
    dispatch[dt] = iepg::Command::detect;

    auto* sp = app.add_subcommand("ssp", "strong-spectral-property verdict for a matrix file");
    sp->add_option("--matrix", cfg.matrix_path, "matrix JSON file")->required();
    add_common(sp);
    dispatch[sp] = iepg::Command::ssp;

    auto* qf = app.add_subcommand("q-formula",
                                  "least number of distinct eigenvalues over K_n minus an edge");
    qf->add_option("--n", cfg.n, "graph order")->required();
    add_common(qf);
    dispatch[qf] = iepg::Command::q_formula;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        cfg.command = dispatch.at(app.get_subcommands().front());
        cfg.text_format = format == "text";
        if (const char* p = std::getenv("IEPG_PRECISION")) {
            const int prec = std::atoi(p);
            if (prec >= 1 && prec <= 17) cfg.precision = prec;
        }
        if (!spectrum_raw.empty()) cfg.spectrum = iepg::parse_spectrum(spectrum_raw);
        if (!mus_raw.empty()) cfg.overrides.mus = iepg::parse_double_list(mus_raw);
        if (!lambda1_raw.empty()) cfg.overrides.lambda1 = iepg::parse_double_list(lambda1_raw);
        if (!signs_raw.empty()) cfg.overrides.signs = iepg::parse_sign_list(signs_raw);
        if (!u_raw.empty()) cfg.u = iepg::parse_double_list(u_raw);
        for (const auto& [pos, value] : iepg::parse_pin_list(pin_raw))
            cfg.pins.push_back(iepg::Pin{pos, value});
    } catch (const iepg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }

    return iepg::run(cfg, std::cout, std::cerr);
}

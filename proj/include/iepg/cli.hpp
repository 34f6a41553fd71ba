// cli.hpp — job configuration and the command runner behind the CLI binary.
// Every realize-style command verifies its result before emitting it; the
// exit code contract is 0 success, 2 infeasible/precondition, 3 numerical
// verification failure, 4 I/O or parse failure.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "iepg/constructions.hpp"
#include "iepg/core.hpp"
#include "iepg/graphs.hpp"
#include "iepg/io.hpp"
#include "iepg/verify.hpp"

namespace iepg {

enum class Command {
    realize_complete,
    realize_bordered,
    realize_clique_cluster,
    realize_cluster_clique,
    realize_kn_minus_e,
    realize_join,
    glue,
    verify,
    detect,
    ssp,
    q_formula,
};

inline const char* command_name(Command c) {
    switch (c) {
        case Command::realize_complete: return "realize-complete";
        case Command::realize_bordered: return "realize-bordered";
        case Command::realize_clique_cluster: return "realize-clique-cluster";
        case Command::realize_cluster_clique: return "realize-cluster-clique";
        case Command::realize_kn_minus_e: return "realize-kn-minus-e";
        case Command::realize_join: return "realize-join";
        case Command::glue: return "glue";
        case Command::verify: return "verify";
        case Command::detect: return "detect";
        case Command::ssp: return "ssp";
        case Command::q_formula: return "q-formula";
    }
    return "?";
}

struct JobConfig {
    Command command = Command::q_formula;
    std::optional<int> n, k, r, i, j;
    std::optional<Spectrum> spectrum;
    RealizeOptions overrides;
    std::vector<Pin> pins;
    std::string matrix_path;
    std::string graph_path;
    std::string a_path;
    std::string b_path;
    std::vector<double> u;
    std::string output_path;  // empty = primary stream
    bool text_format = false;
    ToleranceProfile tol;
    int precision = 17;
};

namespace detail {

inline int require_param(const std::optional<int>& p, const char* name) {
    if (!p) throw InvalidArgument(std::string("missing required parameter ") + name);
    return *p;
}

inline const Spectrum& require_spectrum(const JobConfig& cfg) {
    if (!cfg.spectrum) throw InvalidArgument("missing required --spectrum");
    return *cfg.spectrum;
}

inline GraphSpec star_graph(int m) {
    GraphSpec g(m);
    for (int v = 1; v < m; ++v) g.add_edge(v, m);
    return g;
}

inline void emit(const JobConfig& cfg, std::ostream& out, const std::string& bytes) {
    if (cfg.output_path.empty()) out << bytes;
    else write_file(cfg.output_path, bytes);
}

inline std::string realization_document(const JobConfig& cfg, const SymMatrix& m,
                                        const RealizationReport& rep) {
    if (cfg.text_format) {
        std::string out = matrix_to_text(m);
        out += "spectrum_ok: " + std::string(rep.spectrum_ok ? "true" : "false") +
               "  max_eig_residual: " + format_double(rep.max_eig_residual, 3) +
               "  pattern_ok: " + std::string(rep.pattern_ok ? "true" : "false") + "\n";
        return out;
    }
    return std::string("{\"command\": \"") + command_name(cfg.command) + "\", \"matrix\": " +
           matrix_to_json(m, cfg.precision) + ", \"report\": " +
           report_to_json(rep, cfg.precision) + "}\n";
}

}  // namespace detail

inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) try {
    cfg.tol.validate();

    switch (cfg.command) {
        case Command::q_formula: {
            const int n = detail::require_param(cfg.n, "--n");
            detail::emit(cfg, out, std::to_string(q_kn_minus_edge(n)) + "\n");
            return 0;
        }

        case Command::detect: {
            if (cfg.graph_path.empty()) throw InvalidArgument("missing required --graph");
            const GraphSpec g = graph_from_json(read_file(cfg.graph_path));
            detail::emit(cfg, out, clusters_to_json(detect_clusters(g)) + "\n");
            return 0;
        }

        case Command::ssp: {
            if (cfg.matrix_path.empty()) throw InvalidArgument("missing required --matrix");
            const SymMatrix m = matrix_from_json(read_file(cfg.matrix_path), cfg.tol);
            detail::emit(cfg, out, ssp_to_json(check_ssp(m, cfg.tol), cfg.precision) + "\n");
            return 0;
        }

        case Command::verify: {
            if (cfg.matrix_path.empty()) throw InvalidArgument("missing required --matrix");
            if (cfg.graph_path.empty()) throw InvalidArgument("missing required --graph");
            const SymMatrix m = matrix_from_json(read_file(cfg.matrix_path), cfg.tol);
            const GraphSpec g = graph_from_json(read_file(cfg.graph_path));
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const RealizationReport rep = check_realization(m, g, lambda, cfg.tol);
            detail::emit(cfg, out, report_to_json(rep, cfg.precision) + "\n");
            return rep.all_ok() ? 0 : 3;
        }

        case Command::glue: {
            if (cfg.a_path.empty() || cfg.b_path.empty())
                throw InvalidArgument("glue requires --a and --b matrix files");
            if (cfg.u.empty()) throw InvalidArgument("glue requires --u");
            const SymMatrix a = matrix_from_json(read_file(cfg.a_path), cfg.tol);
            const SymMatrix b = matrix_from_json(read_file(cfg.b_path), cfg.tol);
            const SymMatrix c = smith_glue(a, b, cfg.u, cfg.tol);

            std::vector<double> expected = eig_symmetric(a).values();
            const std::vector<double> eb = eig_symmetric(b).values();
            const double mu = a(a.order() - 1, a.order() - 1);
            std::size_t drop = 0;
            for (std::size_t t = 1; t < eb.size(); ++t)
                if (std::abs(eb[t] - mu) < std::abs(eb[drop] - mu)) drop = t;
            for (std::size_t t = 0; t < eb.size(); ++t)
                if (t != drop) expected.push_back(eb[t]);

            RealizationReport rep =
                check_realization(c, pattern_of(c, cfg.tol), Spectrum(expected), cfg.tol);
            rep.notes += "; spectrum target is eig(A) + eig(B) minus one copy of the corner";
            detail::emit(cfg, out, detail::realization_document(cfg, c, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_complete: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const CompleteRealization cr = complete_realize(lambda, cfg.pins, cfg.tol);
            const RealizationReport rep = check_realization(
                cr.matrix, build_complete(static_cast<int>(lambda.size())), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, cr.matrix, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_bordered: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const BorderedMatrix bm =
                bordered_realize(lambda, cfg.overrides.mus, cfg.overrides.signs, cfg.tol);
            const SymMatrix m = assemble_bordered(bm);
            const RealizationReport rep = check_realization(
                m, detail::star_graph(static_cast<int>(lambda.size())), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, m, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_clique_cluster: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const int n = detail::require_param(cfg.n, "--n");
            const int k = detail::require_param(cfg.k, "--k");
            const int r = detail::require_param(cfg.r, "--r");
            const SymMatrix m = clique_cluster_realize(lambda, n, k, r, cfg.tol, cfg.overrides);
            const RealizationReport rep =
                check_realization(m, build_clique_cluster(n, k, r, false), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, m, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_cluster_clique: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const int n = detail::require_param(cfg.n, "--n");
            const int k = detail::require_param(cfg.k, "--k");
            const int r = detail::require_param(cfg.r, "--r");
            const SymMatrix m = cluster_clique_realize(lambda, n, k, r, cfg.tol, cfg.overrides);
            const RealizationReport rep =
                check_realization(m, build_clique_cluster(n, k, r, true), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, m, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_kn_minus_e: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const int n = detail::require_param(cfg.n, "--n");
            const SymMatrix m = kn_minus_edge_realize(lambda, n, cfg.tol, cfg.overrides);
            const RealizationReport rep =
                check_realization(m, build_kn_minus_edge(n), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, m, rep));
            return rep.all_ok() ? 0 : 3;
        }

        case Command::realize_join: {
            const Spectrum& lambda = detail::require_spectrum(cfg);
            const int n = detail::require_param(cfg.n, "--n");
            const int i = detail::require_param(cfg.i, "--i");
            const int j = detail::require_param(cfg.j, "--j");
            const SymMatrix m = join_realize(lambda, n, i, j, cfg.tol, cfg.overrides);
            const RealizationReport rep =
                check_realization(m, build_join_family(n, i, j), lambda, cfg.tol);
            detail::emit(cfg, out, detail::realization_document(cfg, m, rep));
            return rep.all_ok() ? 0 : 3;
        }
    }
    throw InvalidArgument("unknown command");
} catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
} catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
}

}  // namespace iepg

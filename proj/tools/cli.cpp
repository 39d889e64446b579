#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cidr/config.hpp"
#include "cidr/error.hpp"
#include "cidr/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cidr::cli {

namespace fs = std::filesystem;

namespace {

struct Shared {
    bool quiet = false;
    int threads = 0;
};

struct GenerateArgs {
    std::uint64_t seed = 0;
    std::string out;
    std::size_t points_per_class = 100;
    double iw_scale = 0.15;
    double iw_dof = 8.0;
};

struct FitArgs {
    std::string data;
    std::string method;
    std::string costs;
    std::string out;
};

struct TransformArgs {
    std::string projection;
    std::string data;
    std::size_t dim = 0;
    std::string out;
};

struct ClassifyArgs {
    std::string train;
    std::string test;
    std::string projection;
    std::size_t dim = 0;
    std::string costs;
    std::size_t k = 5;
    std::string out;
};

struct ExperimentArgs {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replications;
    bool no_svg = false;
};

const CLI::Validator kWritableParent = CLI::Validator(
    [](std::string& path) -> std::string {
        const fs::path parent = fs::path(path).parent_path();
        if (!parent.empty() && !fs::is_directory(parent)) return "directory " + parent.string() + " does not exist";
        return {};
    },
    "PATH");

void add_shared(CLI::App* cmd, Shared& shared) {
    cmd->add_flag("--quiet,-q", shared.quiet, "Print only the single result value on stdout");
    cmd->add_option("--threads", shared.threads, "Worker threads (0 = OpenMP default); never changes results")
        ->check(CLI::NonNegativeNumber);
}

void set_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::size_t max_label_plus_one(const Dataset& data) { return data.class_count(); }

int cmd_generate(const GenerateArgs& a, const Shared& s, std::ostream& out, std::ostream& err) {
    GenerativeSpec spec = GenerativeSpec::case_study(a.points_per_class);
    spec.iw_scale = Matrix::identity(spec.dim) * a.iw_scale;
    spec.iw_dof = a.iw_dof;
    const GeneratedData gen = generate_case_study(spec, RngSeed{a.seed, 0});
    write_dataset_csv(fs::path(a.out), gen.data);
    if (s.quiet) {
        out << gen.data.size() << '\n';
    } else {
        err << "wrote " << a.out << ": N=" << gen.data.size() << " D=" << gen.data.dim()
            << " K=" << gen.data.class_count() << " (seed " << a.seed << ")\n";
    }
    return 0;
}

int cmd_fit(const FitArgs& a, const Shared& s, std::ostream& out, std::ostream& err) {
    const Method method = parse_method(a.method);
    if (method == Method::CostInformed && a.costs.empty()) {
        throw Error(ErrorKind::MissingCostMatrix, "--method cost-informed requires --costs <csv>");
    }
    std::optional<CostMatrix> costs;
    if (!a.costs.empty()) costs = read_cost_csv(a.costs);
    const Dataset data =
        read_dataset_csv(a.data, costs ? costs->class_count() : std::size_t{0});
    const Projection p = fit(method, data, costs ? &*costs : nullptr);
    write_projection(fs::path(a.out), p);
    if (s.quiet) {
        out << format_double(p.eigenvalues.front()) << '\n';
    } else {
        err << to_string(method) << " fit on " << data.size() << " rows; eigenvalues:";
        for (double v : p.eigenvalues) err << ' ' << format_double(v);
        err << "\nwrote " << a.out << '\n';
    }
    return 0;
}

int cmd_transform(const TransformArgs& a, const Shared& s, std::ostream& out, std::ostream& err) {
    const Projection p = read_projection(a.projection);
    const Dataset data = read_dataset_csv(a.data);
    const std::size_t dim = a.dim == 0 ? p.source_dim() : a.dim;
    const Dataset reduced = transform(p, data, dim);
    write_dataset_csv(fs::path(a.out), reduced);
    if (s.quiet) {
        out << reduced.size() << '\n';
    } else {
        err << "projected " << reduced.size() << " rows from " << p.source_dim() << " to " << dim
            << " dimensions; wrote " << a.out << '\n';
    }
    return 0;
}

int cmd_classify(const ClassifyArgs& a, const Shared& s, std::ostream& out, std::ostream& err) {
    std::optional<CostMatrix> costs;
    if (!a.costs.empty()) costs = read_cost_csv(a.costs);
    const std::size_t min_classes = costs ? costs->class_count() : 0;
    Dataset train = read_dataset_csv(a.train, min_classes);
    Dataset test = read_dataset_csv(a.test, min_classes);
    const std::size_t classes = std::max(max_label_plus_one(train), max_label_plus_one(test));
    if (costs && costs->class_count() != classes) {
        throw Error(ErrorKind::CostShapeMismatch, "cost matrix has " + std::to_string(costs->class_count()) +
                                                      " classes but the data uses " + std::to_string(classes));
    }
    if (!costs) costs = uniform_cost_matrix(classes);
    train = Dataset(train.features(), {train.labels().begin(), train.labels().end()}, classes);
    test = Dataset(test.features(), {test.labels().begin(), test.labels().end()}, classes);

    if (!a.projection.empty()) {
        const Projection p = read_projection(a.projection);
        const std::size_t dim = a.dim == 0 ? p.source_dim() : a.dim;
        train = transform(p, train, dim);
        test = transform(p, test, dim);
    } else if (a.dim != 0 && a.dim != train.dim()) {
        throw Error(ErrorKind::BadTargetDim, "--dim needs --projection");
    }
    const KnnModel model(train, a.k);
    const ConfusionMatrix cm = confusion(model, test);
    const double cost = total_cost(cm, *costs);
    if (!a.out.empty()) {
        auto file = open_output(a.out);
        write_confusion_csv(file, cm);
    }
    if (s.quiet) {
        out << format_double(cost) << '\n';
    } else {
        std::uint64_t wrong = cm.total();
        for (std::size_t i = 0; i < classes; ++i) wrong -= cm(i, i);
        err << "k=" << a.k << " on " << train.dim() << " features: " << wrong << " of " << cm.total()
            << " test points misclassified; total cost " << format_double(cost) << '\n';
        if (!a.out.empty()) err << "wrote " << a.out << '\n';
    }
    return 0;
}

int cmd_experiment(const ExperimentArgs& a, const Shared& s, std::ostream& err) {
    ExperimentFile file = a.config.empty() ? ExperimentFile{} : load_experiment_config(a.config);
    ExperimentConfig& cfg = file.experiment;
    if (a.seed) cfg.root_seed = *a.seed;
    if (a.replications) cfg.replications = *a.replications;
    if (a.no_svg) file.svg = false;
    cfg.validate();

    const fs::path dir(a.out);
    fs::create_directories(dir);
    if (!s.quiet) {
        err << "running " << cfg.replications << " replications (seed " << cfg.root_seed << ")\n";
    }
    const ExperimentResult result = run_experiment(cfg, s.threads);

    {
        auto f = open_output(dir / "results.csv");
        write_results_csv(f, result.replications);
    }
    {
        auto f = open_output(dir / "summary.csv");
        write_summary_csv(f, result.summary);
    }
    if (file.svg) {
        auto f = open_output(dir / "boxplot.svg");
        write_boxplot_svg(f, result.summary);
    }
    {
        nlohmann::json meta;
        meta["rng"] = std::string(kRngDescription);
        meta["root_seed"] = cfg.root_seed;
        meta["replications"] = cfg.replications;
        meta["per_class_train"] = cfg.per_class_train;
        meta["knn_k"] = cfg.knn_k;
        meta["dims"] = cfg.dims;
        std::vector<std::string> methods;
        for (Method m : cfg.methods) methods.emplace_back(to_string(m));
        meta["methods"] = methods;
        meta["points_per_class"] = cfg.generative.points_per_class;
        meta["iw_dof"] = cfg.generative.iw_dof;
        auto f = open_output(dir / "metadata.json");
        f << meta.dump(2) << '\n';
    }
    if (!s.quiet) {
        for (const auto& e : result.summary) {
            err << "  " << to_string(e.method) << " d=" << e.dim << ": median " << format_double(e.stats.median)
                << " [q1 " << format_double(e.stats.q1) << ", q3 " << format_double(e.stats.q3) << "]\n";
        }
        err << "wrote " << (dir / "results.csv").string() << ", summary.csv" << (file.svg ? ", boxplot.svg" : "")
            << ", metadata.json\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cost-informed linear dimensionality reduction"};
    app.name(args.empty() ? "cidr" : args.front());
    app.require_subcommand(1);

    Shared shared;

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Sample the nine-class synthetic dataset to CSV");
    generate->add_option("--out,-o", gen.out, "Output dataset CSV")->required()->check(kWritableParent);
    generate->add_option("--seed", gen.seed, "Root seed (default 0)");
    generate->add_option("--points-per-class", gen.points_per_class, "Points per class")->check(CLI::PositiveNumber);
    generate->add_option("--iw-scale", gen.iw_scale, "Inverse-Wishart scale multiplier of identity")
        ->check(CLI::PositiveNumber);
    generate->add_option("--iw-dof", gen.iw_dof, "Inverse-Wishart degrees of freedom");
    add_shared(generate, shared);

    FitArgs fit_args;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a projection to a labelled dataset");
    fit_cmd->add_option("--data,-d", fit_args.data, "Dataset CSV")->required()->check(CLI::ExistingFile);
    fit_cmd->add_option("--method,-m", fit_args.method, "pca, lda or cost-informed")
        ->required()
        ->check(CLI::IsMember({"pca", "lda", "cost-informed"}));
    fit_cmd->add_option("--costs,-c", fit_args.costs, "Cost matrix CSV (cost-informed only)")
        ->check(CLI::ExistingFile);
    fit_cmd->add_option("--out,-o", fit_args.out, "Output projection file")->required()->check(kWritableParent);
    add_shared(fit_cmd, shared);

    TransformArgs tr;
    auto* transform_cmd = app.add_subcommand("transform", "Project a dataset onto the leading basis vectors");
    transform_cmd->add_option("--projection,-p", tr.projection, "Projection file")
        ->required()
        ->check(CLI::ExistingFile);
    transform_cmd->add_option("--data,-d", tr.data, "Dataset CSV")->required()->check(CLI::ExistingFile);
    transform_cmd->add_option("--dim", tr.dim, "Target dimensionality (default: all)");
    transform_cmd->add_option("--out,-o", tr.out, "Output dataset CSV")->required()->check(kWritableParent);
    add_shared(transform_cmd, shared);

    ClassifyArgs cl;
    auto* classify_cmd = app.add_subcommand("classify", "KNN confusion matrix and total misclassification cost");
    classify_cmd->add_option("--train", cl.train, "Training dataset CSV")->required()->check(CLI::ExistingFile);
    classify_cmd->add_option("--test", cl.test, "Test dataset CSV")->required()->check(CLI::ExistingFile);
    classify_cmd->add_option("--projection,-p", cl.projection, "Projection applied to both sets first")
        ->check(CLI::ExistingFile);
    classify_cmd->add_option("--dim", cl.dim, "Target dimensionality (default: all)");
    classify_cmd->add_option("--costs,-c", cl.costs, "Cost matrix CSV (default: unit costs)")
        ->check(CLI::ExistingFile);
    classify_cmd->add_option("--k", cl.k, "Neighbour count")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--out,-o", cl.out, "Confusion matrix CSV")->check(kWritableParent);
    add_shared(classify_cmd, shared);

    ExperimentArgs ex;
    auto* experiment_cmd = app.add_subcommand("experiment", "Run the replicated cost comparison");
    experiment_cmd->add_option("--config", ex.config, "JSON config (default: built-in case study)")
        ->check(CLI::ExistingFile);
    experiment_cmd->add_option("--out,-o", ex.out, "Output directory")->required();
    experiment_cmd->add_option("--seed", ex.seed, "Root seed; overrides the config");
    experiment_cmd->add_option("--replications", ex.replications, "Overrides the config")
        ->check(CLI::PositiveNumber);
    experiment_cmd->add_flag("--no-svg", ex.no_svg, "Skip the box-plot SVG");
    add_shared(experiment_cmd, shared);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    set_threads(shared.threads);
    try {
        if (*generate) return cmd_generate(gen, shared, out, err);
        if (*fit_cmd) return cmd_fit(fit_args, shared, out, err);
        if (*transform_cmd) return cmd_transform(tr, shared, out, err);
        if (*classify_cmd) return cmd_classify(cl, shared, out, err);
        if (*experiment_cmd) return cmd_experiment(ex, shared, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace cidr::cli

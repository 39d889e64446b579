#include "cidr/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "cidr/error.hpp"

namespace cidr {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void parse_error(std::string_view source, std::size_t line, std::size_t column,
                              const std::string& what) {
    std::string where = std::string(source) + ":" + std::to_string(line);
    if (column > 0) where += ":" + std::to_string(column);
    throw Error(ErrorKind::Parse, where + ": " + what);
}

std::optional<double> to_double(std::string_view token) {
    double value = 0.0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<std::string> split_fields(std::string_view line, char sep = ',') {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

struct NumberedLine {
    std::size_t number;
    std::string text;
};

// Non-blank lines with their 1-based line numbers.
std::vector<NumberedLine> content_lines(std::istream& in) {
    std::vector<NumberedLine> lines;
    std::string text;
    for (std::size_t n = 1; std::getline(in, text); ++n) {
        if (!trim(text).empty()) lines.push_back({n, text});
    }
    return lines;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for reading");
    return in;
}

double parse_number(std::string_view source, std::size_t line, std::size_t column, const std::string& token) {
    const auto v = to_double(token);
    if (!v) parse_error(source, line, column, "expected a finite number, got '" + token + "'");
    return *v;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) throw Error(ErrorKind::Io, "cannot format number");
    return std::string(buf, ptr);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    return out;
}

// ---------------------------------------------------------------- datasets

Dataset parse_dataset_csv(std::istream& in, std::string_view source, std::size_t min_class_count) {
    const auto lines = content_lines(in);
    if (lines.empty()) parse_error(source, 1, 0, "empty dataset file");

    std::size_t first = 0;
    std::size_t width = split_fields(lines[0].text).size();
    if (!to_double(split_fields(lines[0].text)[0])) first = 1;  // header
    if (width < 2) parse_error(source, lines[0].number, 0, "need at least one feature column and a label");
    if (first == lines.size()) parse_error(source, lines[0].number, 0, "dataset has a header but no rows");

    const std::size_t dim = width - 1;
    std::vector<double> entries;
    std::vector<Label> labels;
    entries.reserve((lines.size() - first) * dim);
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        const auto fields = split_fields(text);
        if (fields.size() != width) {
            parse_error(source, number, std::min(fields.size(), width) + 1,
                        "expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < dim; ++c) entries.push_back(parse_number(source, number, c + 1, fields[c]));
        const std::string& label = fields[dim];
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
        if (ec != std::errc() || ptr != label.data() + label.size() || label.empty()) {
            parse_error(source, number, width, "expected a nonnegative integer label, got '" + label + "'");
        }
        labels.push_back(value);
    }
    const std::size_t classes = std::max(min_class_count, *std::max_element(labels.begin(), labels.end()) + 1);
    const std::size_t rows = labels.size();
    return Dataset(Matrix(rows, dim, std::move(entries)), std::move(labels), classes);
}

Dataset read_dataset_csv(const std::filesystem::path& path, std::size_t min_class_count) {
    auto in = open_input(path);
    return parse_dataset_csv(in, path.string(), min_class_count);
}

void write_dataset_csv(std::ostream& out, const Dataset& data) {
    for (std::size_t c = 0; c < data.dim(); ++c) out << 'x' << c + 1 << ',';
    out << "label\n";
    for (std::size_t r = 0; r < data.size(); ++r) {
        for (double v : data.features().row(r)) out << format_double(v) << ',';
        out << data.labels()[r] << '\n';
    }
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
    auto out = open_output(path);
    write_dataset_csv(out, data);
}

// ------------------------------------------------------------------- costs

CostMatrix parse_cost_csv(std::istream& in, std::string_view source) {
    const auto lines = content_lines(in);
    if (lines.empty()) parse_error(source, 1, 0, "empty cost file");
    std::size_t first = to_double(split_fields(lines[0].text)[0]) ? 0 : 1;
    const std::size_t k = lines.size() - first;
    if (k == 0) parse_error(source, lines[0].number, 0, "cost file has a header but no rows");

    std::vector<double> entries;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i].text);
        if (fields.size() != k) {
            parse_error(source, lines[i].number, std::min(fields.size(), k) + 1,
                        "expected " + std::to_string(k) + " costs per row, found " + std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < k; ++c) entries.push_back(parse_number(source, lines[i].number, c + 1, fields[c]));
    }
    try {
        return validate_cost_matrix(Matrix(k, k, std::move(entries)));
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(source) + ": " + e.message());
    }
}

CostMatrix read_cost_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_cost_csv(in, path.string());
}

void write_cost_csv(std::ostream& out, const CostMatrix& costs) {
    for (std::size_t i = 0; i < costs.class_count(); ++i) {
        for (std::size_t j = 0; j < costs.class_count(); ++j) {
            out << (j ? "," : "") << format_double(costs(i, j));
        }
        out << '\n';
    }
}

// ------------------------------------------------------------- projections

Projection parse_projection(std::istream& in, std::string_view source) {
    const auto lines = content_lines(in);
    std::size_t at = 0;
    const auto next = [&](std::string_view key) -> std::pair<std::size_t, std::vector<std::string>> {
        if (at == lines.size()) parse_error(source, lines.empty() ? 1 : lines.back().number + 1, 0,
                                            "missing '" + std::string(key) + "'");
        const auto& line = lines[at++];
        auto words = split_words(line.text);
        if (words.empty() || words[0] != key) {
            parse_error(source, line.number, 1, "expected '" + std::string(key) + "'");
        }
        return {line.number, std::move(words)};
    };

    auto [magic_line, magic] = next("cidr-projection");
    if (magic.size() != 2 || magic[1] != "1") parse_error(source, magic_line, 2, "unsupported projection version");

    auto [method_line, method] = next("method");
    if (method.size() != 2) parse_error(source, method_line, 2, "expected one method name");
    Projection p;
    try {
        p.method = parse_method(method[1]);
    } catch (const Error& e) {
        parse_error(source, method_line, 2, e.message());
    }

    auto [dim_line, dim_words] = next("source_dim");
    if (dim_words.size() != 2) parse_error(source, dim_line, 2, "expected one dimension");
    const double dim_value = parse_number(source, dim_line, 2, dim_words[1]);
    if (dim_value < 1 || dim_value != std::floor(dim_value)) parse_error(source, dim_line, 2, "bad source_dim");
    const auto dim = static_cast<std::size_t>(dim_value);

    auto [eig_line, eig_words] = next("eigenvalues");
    if (eig_words.size() != dim + 1) {
        parse_error(source, eig_line, 0, "expected " + std::to_string(dim) + " eigenvalues");
    }
    for (std::size_t i = 1; i <= dim; ++i) p.eigenvalues.push_back(parse_number(source, eig_line, i + 1, eig_words[i]));

    auto [basis_line, basis_words] = next("basis");
    if (basis_words.size() != 1) parse_error(source, basis_line, 2, "unexpected tokens after 'basis'");
    std::vector<double> entries;
    for (std::size_t r = 0; r < dim; ++r) {
        if (at == lines.size()) parse_error(source, basis_line + r + 1, 0, "basis has fewer than " +
                                                                              std::to_string(dim) + " rows");
        const auto& line = lines[at++];
        const auto words = split_words(line.text);
        if (words.size() != dim) {
            parse_error(source, line.number, 0, "basis row needs " + std::to_string(dim) + " values");
        }
        for (std::size_t c = 0; c < dim; ++c) entries.push_back(parse_number(source, line.number, c + 1, words[c]));
    }
    if (at != lines.size()) parse_error(source, lines[at].number, 1, "trailing content after basis");
    p.basis = Matrix(dim, dim, std::move(entries));
    return p;
}

Projection read_projection(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_projection(in, path.string());
}

void write_projection(std::ostream& out, const Projection& projection) {
    out << "cidr-projection 1\n";
    out << "method " << to_string(projection.method) << '\n';
    out << "source_dim " << projection.source_dim() << '\n';
    out << "eigenvalues";
    for (double v : projection.eigenvalues) out << ' ' << format_double(v);
    out << "\nbasis\n";
    for (std::size_t r = 0; r < projection.basis.rows(); ++r) {
        const auto row = projection.basis.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << format_double(row[c]);
        out << '\n';
    }
}

void write_projection(const std::filesystem::path& path, const Projection& projection) {
    auto out = open_output(path);
    write_projection(out, projection);
}

// ------------------------------------------------------------ experiment

void write_confusion_csv(std::ostream& out, const ConfusionMatrix& confusion) {
    out << "true\\pred";
    for (std::size_t j = 0; j < confusion.class_count(); ++j) out << ',' << j;
    out << '\n';
    for (std::size_t i = 0; i < confusion.class_count(); ++i) {
        out << i;
        for (std::size_t j = 0; j < confusion.class_count(); ++j) out << ',' << confusion(i, j);
        out << '\n';
    }
}

void write_results_csv(std::ostream& out, std::span<const ReplicationResult> results) {
    out << "replication,method,dim,total_cost\n";
    for (const auto& rep : results) {
        for (const auto& cell : rep.cells) {
            out << rep.id << ',' << to_string(cell.method) << ',' << cell.dim << ',' << format_double(cell.total_cost)
                << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const BoxPlotSummary& summary) {
    out << "method,dim,min,q1,median,q3,max,mean,n_outliers\n";
    for (const auto& e : summary) {
        const auto& s = e.stats;
        out << to_string(e.method) << ',' << e.dim << ',' << format_double(s.min) << ',' << format_double(s.q1) << ','
            << format_double(s.median) << ',' << format_double(s.q3) << ',' << format_double(s.max) << ','
            << format_double(s.mean) << ',' << s.outliers.size() << '\n';
    }
}

void write_boxplot_svg(std::ostream& out, const BoxPlotSummary& summary) {
    std::vector<std::size_t> dims;
    std::vector<Method> methods;
    double top = 0.0;
    for (const auto& e : summary) {
        if (std::find(dims.begin(), dims.end(), e.dim) == dims.end()) dims.push_back(e.dim);
        if (std::find(methods.begin(), methods.end(), e.method) == methods.end()) methods.push_back(e.method);
        top = std::max(top, e.stats.max);
    }
    // highest dimensionality on the left, as dimensions are removed left to right
    std::sort(dims.rbegin(), dims.rend());
    if (top <= 0.0) top = 1.0;

    const double width = 160.0 * static_cast<double>(std::max<std::size_t>(dims.size(), 1)) + 120.0;
    const double height = 420.0;
    const double left = 70.0;
    const double plot_top = 30.0;
    const double plot_bottom = 360.0;
    const auto y_of = [&](double v) { return plot_bottom - (plot_bottom - plot_top) * v / top; };
    static constexpr const char* kColours[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << plot_top << "\" x2=\"" << left << "\" y2=\"" << plot_bottom
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double v = top * tick / 4.0;
        out << "<text x=\"" << left - 6 << "\" y=\"" << y_of(v) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
            << format_double(std::round(v)) << "</text>\n";
    }
    out << "<text x=\"16\" y=\"" << (plot_top + plot_bottom) / 2
        << "\" font-size=\"12\" transform=\"rotate(-90 16 " << (plot_top + plot_bottom) / 2
        << ")\" text-anchor=\"middle\">total misclassification cost</text>\n";

    const double group = 160.0;
    const double box = 30.0;
    for (std::size_t g = 0; g < dims.size(); ++g) {
        const double x0 = left + 20.0 + group * static_cast<double>(g);
        out << "<text x=\"" << x0 + group / 2 - 20 << "\" y=\"" << plot_bottom + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">d = " << dims[g] << "</text>\n";
        for (std::size_t m = 0; m < methods.size(); ++m) {
            const auto it = std::find_if(summary.begin(), summary.end(), [&](const SummaryEntry& e) {
                return e.dim == dims[g] && e.method == methods[m];
            });
            if (it == summary.end()) continue;
            const auto& s = it->stats;
            const double cx = x0 + box / 2 + static_cast<double>(m) * (box + 8.0);
            const char* colour = kColours[m % 4];
            out << "<line x1=\"" << cx << "\" y1=\"" << y_of(s.whisker_low) << "\" x2=\"" << cx << "\" y2=\""
                << y_of(s.whisker_high) << "\" stroke=\"black\"/>\n";
            out << "<rect x=\"" << cx - box / 2 << "\" y=\"" << y_of(s.q3) << "\" width=\"" << box << "\" height=\""
                << std::max(y_of(s.q1) - y_of(s.q3), 1.0) << "\" fill=\"" << colour << "\" stroke=\"black\"/>\n";
            out << "<line x1=\"" << cx - box / 2 << "\" y1=\"" << y_of(s.median) << "\" x2=\"" << cx + box / 2
                << "\" y2=\"" << y_of(s.median) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            for (double o : s.outliers) {
                out << "<circle cx=\"" << cx << "\" cy=\"" << y_of(o) << "\" r=\"2\" fill=\"none\" stroke=\""
                    << colour << "\"/>\n";
            }
        }
    }
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const double ly = plot_bottom + 40;
        const double lx = left + 20.0 + 130.0 * static_cast<double>(m);
        out << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\"" << kColours[m % 4]
            << "\"/>\n";
        out << "<text x=\"" << lx + 16 << "\" y=\"" << ly + 11 << "\" font-size=\"12\">" << to_string(methods[m])
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace cidr

#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "cidr/classify.hpp"
#include "cidr/costmodel.hpp"
#include "cidr/dataset.hpp"
#include "cidr/experiment.hpp"
#include "cidr/reducers.hpp"

namespace cidr {

/// 17 significant digits, so parsing the text back yields the same double.
std::string format_double(double value);

/// `x1,...,xD,label` header then one row per point. class_count is one past
/// the largest label, or `min_class_count` if that is larger.
Dataset parse_dataset_csv(std::istream& in, std::string_view source, std::size_t min_class_count = 0);
Dataset read_dataset_csv(const std::filesystem::path& path, std::size_t min_class_count = 0);
void write_dataset_csv(std::ostream& out, const Dataset& data);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);

/// K rows of K comma-separated costs; an optional header row is recognised by
/// a non-numeric first token.
CostMatrix parse_cost_csv(std::istream& in, std::string_view source);
CostMatrix read_cost_csv(const std::filesystem::path& path);
void write_cost_csv(std::ostream& out, const CostMatrix& costs);

// Projection text format:
//
//   cidr-projection 1
//   method <pca|lda|cost-informed>
//   source_dim <D>
//   eigenvalues <v1> ... <vD>
//   basis
//   <D rows of D values, row-major>
Projection parse_projection(std::istream& in, std::string_view source);
Projection read_projection(const std::filesystem::path& path);
void write_projection(std::ostream& out, const Projection& projection);
void write_projection(const std::filesystem::path& path, const Projection& projection);

/// Header row `true\pred,0,1,...`, then one row per true label.
void write_confusion_csv(std::ostream& out, const ConfusionMatrix& confusion);

/// `replication,method,dim,total_cost`
void write_results_csv(std::ostream& out, std::span<const ReplicationResult> results);
/// `method,dim,min,q1,median,q3,max,mean,n_outliers`
void write_summary_csv(std::ostream& out, const BoxPlotSummary& summary);
/// Box plots grouped by dimensionality, one box per method.
void write_boxplot_svg(std::ostream& out, const BoxPlotSummary& summary);

/// Opens `path` for writing or throws an Io error naming it.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace cidr

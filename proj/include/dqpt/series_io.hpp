#pragma once

#include <filesystem>
#include <string>

#include "dqpt/loschmidt.hpp"

namespace dqpt {

enum class SeriesFormat { csv, json };

SeriesFormat format_from_name(const std::string& name);
std::string format_extension(SeriesFormat format);

/// CSV: header `t,lambda[,le]`, >= 12 significant digits, literal `inf` for
/// the divergence sentinel. JSON: {"metadata": {...}, "t": [...],
/// "lambda": [...]} with the sentinel spelled as the string "inf".
void write_series(const RateSeries& series, const std::filesystem::path& path,
                  SeriesFormat format);

RateSeries read_series(const std::filesystem::path& path, SeriesFormat format);

}  // namespace dqpt

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/geometry.hpp"
#include "rainbowlab/partition.hpp"
#include "rainbowlab/skew.hpp"

namespace rainbowlab {

// Point sets: header "d n", then n lines of d rationals ("p/q" or integers).
PointSet parse_pointset(std::string_view text);
std::string format_pointset(const PointSet& X);

// Partitions: one class per line, indices separated by spaces.
Partition parse_partition(std::string_view text);
std::string format_partition(const std::vector<IndexSet>& classes);
std::string format_partition(const Partition& E);

// Colorings: one line "i_1 ... i_r color" per r-subset, indices strictly
// increasing. n and r are inferred and totality is checked; c defaults to
// 1 + the largest color. Lines starting with '#' are ignored.
Coloring parse_coloring(std::string_view text, std::optional<int> colors = std::nullopt);
std::string format_coloring(const Coloring& g);

// Word sets: one bit string per line.
std::vector<BinaryWord> parse_words(std::string_view text);
std::string format_words(std::span<const BinaryWord> words);

/// Whitespace-separated non-negative indices.
IndexSet parse_index_set(std::string_view text);
std::string format_index_set(std::span<const Index> s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// 64-bit FNV-1a, hex encoded; used for input digests in run reports.
std::string fnv1a_hex(std::string_view data);

}  // namespace rainbowlab

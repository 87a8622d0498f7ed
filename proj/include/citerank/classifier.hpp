#pragma once

// Majority-rule topic assignment for publications missing a topic cluster.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "citerank/corpus.hpp"

namespace citerank {

struct RelatedRecords {
    std::string pub_id;
    std::vector<std::string> related_ids;
};

struct RelatedLoad {
    std::vector<RelatedRecords> records;
    std::vector<RowError> errors;
};

/// Reads `pub_id,related_ids` with `|`-separated ids. Records with an empty
/// related list or that list their own pub_id are reported as row errors.
RelatedLoad read_related(std::istream& in);
RelatedLoad load_related(const std::filesystem::path& path);

struct AssignmentReport {
    std::size_t assigned = 0;          // unclassified publications that received a topic
    std::size_t unassigned = 0;        // unclassified publications still without one
    std::size_t ignored_external = 0;  // related ids not present in the corpus
};

/// Gives every unclassified publication the topic that occurs most often among
/// the topics of its related records (ties: smallest topic id). Only topics
/// present before the call are consulted, so the outcome does not depend on
/// processing order. Classified publications are never touched.
std::pair<Corpus, AssignmentReport> assign_majority(const Corpus& corpus,
                                                    const std::vector<RelatedRecords>& related);

}  // namespace citerank

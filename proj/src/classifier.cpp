#include "citerank/classifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "citerank/delimited.hpp"
#include "citerank/errors.hpp"

namespace citerank {

RelatedLoad read_related(std::istream& in) {
    const auto table = delimited::read(in);
    const auto pub_col = table.column("pub_id");
    const auto rel_col = table.column("related_ids");
    if (!pub_col || !rel_col) {
        throw SchemaError("related-records file needs columns pub_id and related_ids");
    }

    RelatedLoad result;
    for (const auto& row : table.rows) {
        if (std::max(*pub_col, *rel_col) >= row.fields.size()) {
            result.errors.push_back({row.line, "too few fields"});
            continue;
        }
        RelatedRecords rec;
        rec.pub_id = row.fields[*pub_col];
        for (auto& id : delimited::split_list(row.fields[*rel_col])) {
            if (!id.empty()) rec.related_ids.push_back(std::move(id));
        }
        if (rec.pub_id.empty()) {
            result.errors.push_back({row.line, "empty pub_id"});
            continue;
        }
        if (rec.related_ids.empty()) {
            result.errors.push_back({row.line, "no related ids for " + rec.pub_id});
            continue;
        }
        if (std::find(rec.related_ids.begin(), rec.related_ids.end(), rec.pub_id) !=
            rec.related_ids.end()) {
            result.errors.push_back({row.line, rec.pub_id + " lists itself as related"});
            continue;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

RelatedLoad load_related(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_related(in);
}

std::pair<Corpus, AssignmentReport> assign_majority(const Corpus& corpus,
                                                    const std::vector<RelatedRecords>& related) {
    std::unordered_map<std::string_view, const Publication*> by_id;
    by_id.reserve(corpus.publications.size());
    for (const auto& p : corpus.publications) by_id.emplace(p.pub_id, &p);

    // All records for the same publication pool their related ids.
    std::unordered_map<std::string_view, std::vector<const RelatedRecords*>> records_for;
    for (const auto& rec : related) records_for[rec.pub_id].push_back(&rec);

    Corpus out = corpus;
    AssignmentReport report;
    for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
        const auto& pub = corpus.publications[i];
        if (pub.classified()) continue;

        std::map<std::string_view, std::size_t> votes;  // ordered: first max is smallest id
        if (auto it = records_for.find(pub.pub_id); it != records_for.end()) {
            for (const auto* rec : it->second) {
                for (const auto& rid : rec->related_ids) {
                    auto hit = by_id.find(rid);
                    if (hit == by_id.end()) {
                        ++report.ignored_external;
                        continue;
                    }
                    // reads the input corpus, so topics assigned in this pass never vote
                    if (const auto& topic = hit->second->topic_id) ++votes[*topic];
                }
            }
        }

        const std::string_view* winner = nullptr;
        std::size_t best = 0;
        for (const auto& [topic, n] : votes) {
            if (n > best) {
                best = n;
                winner = &topic;
            }
        }
        if (winner) {
            out.publications[i].topic_id = std::string(*winner);
            ++report.assigned;
        } else {
            ++report.unassigned;
        }
    }
    return {std::move(out), report};
}

}  // namespace citerank

#pragma once

#include <string>
#include <vector>

namespace wf::icons {

struct IconRecord {
    std::string id;
    std::string svg_path;
    std::string caption;
    std::vector<double> vis_embed;
    std::vector<double> txt_embed;
};

struct SearchHit {
    std::string id;
    double vis_score;
    double txt_score;
};

// Immutable embedding index. Embeddings are L2-normalized at ingest so dot
// products are cosine similarities; the first record fixes the dimensions.
class IconIndex {
public:
    static IconIndex from_records(std::vector<IconRecord> records);
    static IconIndex load_jsonl(const std::string& path);
    void write_jsonl(const std::string& path) const;

    size_t size() const { return records_.size(); }
    int vis_dim() const { return vis_dim_; }
    int txt_dim() const { return txt_dim_; }
    const std::vector<IconRecord>& records() const { return records_; }
    const IconRecord* find(const std::string& id) const;

    // Two-stage search: rank all records by visual cosine, keep the top
    // `coarse_k`, re-rank those by textual cosine, return the top `final_n`.
    // Ties break by ascending id at both stages.
    std::vector<SearchHit> search(const std::vector<double>& vis_query,
                                  const std::vector<double>& txt_query, int coarse_k = 50,
                                  int final_n = 5) const;

private:
    std::vector<IconRecord> records_;
    int vis_dim_ = 0;
    int txt_dim_ = 0;
};

} // namespace wf::icons

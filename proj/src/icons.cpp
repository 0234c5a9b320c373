#include "widgetforge/icons.hpp"

#include "widgetforge/dsl.hpp"
#include "widgetforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace wf::icons {

namespace {

using dsl::Json;
using dsl::OrderedJson;

std::string where(size_t line)
{
    return "line " + std::to_string(line);
}

std::vector<double> embedding_field(const Json& j, const char* key, const std::string& at)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_array())
        throw Error(ErrorCode::SchemaError,
                    std::string("record requires a numeric array \"") + key + "\"", at);
    std::vector<double> out;
    out.reserve(it->size());
    for (const auto& e : *it) {
        if (!e.is_number())
            throw Error(ErrorCode::SchemaError,
                        std::string("\"") + key + "\" entries must be numbers", at);
        out.push_back(e.get<double>());
    }
    if (out.empty())
        throw Error(ErrorCode::SchemaError, std::string("\"") + key + "\" must be non-empty", at);
    return out;
}

std::string string_field(const Json& j, const char* key, const std::string& at)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        throw Error(ErrorCode::SchemaError, std::string("record requires a string \"") + key + "\"",
                    at);
    return it->get<std::string>();
}

void normalize(std::vector<double>& v, ErrorCode zero_code, const std::string& what,
               const std::string& at)
{
    double sq = 0.0;
    for (double x : v)
        sq += x * x;
    double norm = std::sqrt(sq);
    if (!(norm > 0.0))
        throw Error(zero_code, what + " must have a non-zero norm", at);
    for (double& x : v)
        x /= norm;
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IconRecord parse_record(const Json& j, const std::string& at)
{
    if (!j.is_object())
        throw Error(ErrorCode::SchemaError, "record must be a JSON object", at);
    IconRecord rec;
    rec.id = string_field(j, "id", at);
    if (rec.id.empty())
        throw Error(ErrorCode::SchemaError, "\"id\" must be non-empty", at);
    rec.svg_path = string_field(j, "svg_path", at);
    rec.caption = string_field(j, "caption", at);
    rec.vis_embed = embedding_field(j, "vis_embed", at);
    rec.txt_embed = embedding_field(j, "txt_embed", at);
    return rec;
}

} // namespace

IconIndex IconIndex::from_records(std::vector<IconRecord> records)
{
    IconIndex index;
    std::set<std::string> seen;
    for (size_t i = 0; i < records.size(); ++i) {
        IconRecord& rec = records[i];
        std::string at = "record " + std::to_string(i) + " (" + rec.id + ")";
        if (rec.vis_embed.empty() || rec.txt_embed.empty())
            throw Error(ErrorCode::SchemaError, "embeddings must be non-empty", at);
        if (index.vis_dim_ == 0) {
            index.vis_dim_ = static_cast<int>(rec.vis_embed.size());
            index.txt_dim_ = static_cast<int>(rec.txt_embed.size());
        } else if (static_cast<int>(rec.vis_embed.size()) != index.vis_dim_
                   || static_cast<int>(rec.txt_embed.size()) != index.txt_dim_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "embedding dimensions differ from the first record", at);
        }
        if (!seen.insert(rec.id).second)
            throw Error(ErrorCode::DuplicateId, "duplicate id \"" + rec.id + "\"", at);
        normalize(rec.vis_embed, ErrorCode::SchemaError, "\"vis_embed\"", at);
        normalize(rec.txt_embed, ErrorCode::SchemaError, "\"txt_embed\"", at);
    }
    index.records_ = std::move(records);
    return index;
}

IconIndex IconIndex::load_jsonl(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open \"" + path + "\"");
    std::vector<IconRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw Error(ErrorCode::SyntaxError, "invalid JSON record", where(line_no));
        records.push_back(parse_record(j, where(line_no)));
    }
    return from_records(std::move(records));
}

void IconIndex::write_jsonl(const std::string& path) const
{
    std::ostringstream out;
    for (const auto& rec : records_) {
        OrderedJson j;
        j["id"] = rec.id;
        j["svg_path"] = rec.svg_path;
        j["caption"] = rec.caption;
        j["vis_embed"] = rec.vis_embed;
        j["txt_embed"] = rec.txt_embed;
        out << j.dump() << "\n";
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
    f << out.str();
    if (!f.flush())
        throw Error(ErrorCode::IoError, "failed to write \"" + path + "\"");
}

const IconRecord* IconIndex::find(const std::string& id) const
{
    for (const auto& rec : records_)
        if (rec.id == id)
            return &rec;
    return nullptr;
}

std::vector<SearchHit> IconIndex::search(const std::vector<double>& vis_query,
                                         const std::vector<double>& txt_query, int coarse_k,
                                         int final_n) const
{
    if (records_.empty())
        throw Error(ErrorCode::EmptyIndex, "index has no records");
    if (coarse_k < 1 || final_n < 1)
        throw Error(ErrorCode::BadParameter, "result counts must be at least 1");
    if (static_cast<int>(vis_query.size()) != vis_dim_)
        throw Error(ErrorCode::DimensionMismatch,
                    "visual query has dimension " + std::to_string(vis_query.size()) + ", expected "
                        + std::to_string(vis_dim_));
    if (static_cast<int>(txt_query.size()) != txt_dim_)
        throw Error(ErrorCode::DimensionMismatch,
                    "textual query has dimension " + std::to_string(txt_query.size())
                        + ", expected " + std::to_string(txt_dim_));

    std::vector<double> vq = vis_query;
    std::vector<double> tq = txt_query;
    normalize(vq, ErrorCode::BadParameter, "visual query", "");
    normalize(tq, ErrorCode::BadParameter, "textual query", "");

    std::vector<SearchHit> hits;
    hits.reserve(records_.size());
    for (const auto& rec : records_)
        hits.push_back({rec.id, dot(vq, rec.vis_embed), dot(tq, rec.txt_embed)});

    auto by_vis = [](const SearchHit& a, const SearchHit& b) {
        if (a.vis_score != b.vis_score)
            return a.vis_score > b.vis_score;
        return a.id < b.id;
    };
    auto by_txt = [](const SearchHit& a, const SearchHit& b) {
        if (a.txt_score != b.txt_score)
            return a.txt_score > b.txt_score;
        return a.id < b.id;
    };

    std::sort(hits.begin(), hits.end(), by_vis);
    if (hits.size() > static_cast<size_t>(coarse_k))
        hits.resize(static_cast<size_t>(coarse_k));
    std::sort(hits.begin(), hits.end(), by_txt);
    if (hits.size() > static_cast<size_t>(final_n))
        hits.resize(static_cast<size_t>(final_n));
    return hits;
}

} // namespace wf::icons

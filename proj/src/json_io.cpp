#include "infowidth/json_io.hpp"

#include <string>
#include <variant>
#include <vector>

namespace infowidth {

using nlohmann::json;

JsonInputError::JsonInputError(const std::string& message, std::size_t line, std::size_t column)
    : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

std::string path_string(const Path& path) {
    std::string out;
    for (const auto& step : path) {
        out += '/';
        if (const auto* k = std::get_if<std::string>(&step)) out += *k;
        else out += std::to_string(std::get<std::size_t>(step));
    }
    return out.empty() ? "/" : out;
}

// Minimal scanner over text that already parsed successfully; finds where the value at
// a path begins so schema errors can name a line.
class Locator {
public:
    explicit Locator(std::string_view text) : text_(text) {}

    std::size_t find(const Path& path) const {
        std::size_t pos = skip_ws(0);
        for (const auto& step : path) {
            const std::size_t next = descend(pos, step);
            if (next == std::string_view::npos) return pos;
            pos = next;
        }
        return pos;
    }

    std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

private:
    std::size_t skip_ws(std::size_t pos) const {
        while (pos < text_.size() && (text_[pos] == ' ' || text_[pos] == '\t' || text_[pos] == '\n' || text_[pos] == '\r'))
            ++pos;
        return pos;
    }

    std::size_t skip_string(std::size_t pos) const {
        ++pos;
        while (pos < text_.size() && text_[pos] != '"') pos += (text_[pos] == '\\') ? 2 : 1;
        return pos + 1;
    }

    std::size_t skip_value(std::size_t pos) const {
        if (pos >= text_.size()) return pos;
        if (text_[pos] == '"') return skip_string(pos);
        if (text_[pos] == '{' || text_[pos] == '[') {
            int depth = 0;
            while (pos < text_.size()) {
                const char c = text_[pos];
                if (c == '"') {
                    pos = skip_string(pos);
                    continue;
                }
                if (c == '{' || c == '[') ++depth;
                if (c == '}' || c == ']') {
                    if (--depth == 0) return pos + 1;
                }
                ++pos;
            }
            return pos;
        }
        while (pos < text_.size() && text_[pos] != ',' && text_[pos] != ']' && text_[pos] != '}' && text_[pos] != ' ' &&
               text_[pos] != '\n' && text_[pos] != '\t' && text_[pos] != '\r')
            ++pos;
        return pos;
    }

    std::size_t descend(std::size_t pos, const PathStep& step) const {
        if (pos >= text_.size()) return std::string_view::npos;
        if (text_[pos] == '{' && std::holds_alternative<std::string>(step)) {
            const auto& key = std::get<std::string>(step);
            pos = skip_ws(pos + 1);
            while (pos < text_.size() && text_[pos] == '"') {
                const std::size_t end = skip_string(pos);
                const std::string_view k = text_.substr(pos + 1, end - pos - 2);
                pos = skip_ws(end);
                if (pos < text_.size() && text_[pos] == ':') pos = skip_ws(pos + 1);
                if (k == key) return pos;
                pos = skip_ws(skip_value(pos));
                if (pos < text_.size() && text_[pos] == ',') pos = skip_ws(pos + 1);
            }
            return std::string_view::npos;
        }
        if (text_[pos] == '[' && std::holds_alternative<std::size_t>(step)) {
            const std::size_t index = std::get<std::size_t>(step);
            pos = skip_ws(pos + 1);
            for (std::size_t i = 0; pos < text_.size() && text_[pos] != ']'; ++i) {
                if (i == index) return pos;
                pos = skip_ws(skip_value(pos));
                if (pos < text_.size() && text_[pos] == ',') pos = skip_ws(pos + 1);
            }
        }
        return std::string_view::npos;
    }

    std::string_view text_;
};

class Document {
public:
    explicit Document(std::string_view text) : text_(text), locator_(text) {
        try {
            root_ = json::parse(text_.begin(), text_.end());
        } catch (const json::parse_error& e) {
            const auto [line, col] = locator_.line_column(e.byte > 0 ? e.byte - 1 : 0);
            throw JsonInputError(std::string("malformed JSON: ") + e.what(), line, col);
        }
    }

    const json& root() const { return root_; }

    [[noreturn]] void fail(const Path& path, const std::string& message) const {
        const auto [line, col] = locator_.line_column(locator_.find(path));
        throw JsonInputError(path_string(path) + ": " + message, line, col);
    }

    // Rethrows library errors raised while building values at `path` with a location.
    template <class Fn>
    auto at(const Path& path, Fn&& fn) const {
        try {
            return fn();
        } catch (const JsonInputError&) {
            throw;
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }

    const json& member(const json& obj, const Path& path, const std::string& key) const {
        if (!obj.is_object()) fail(path, "expected an object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
        return *it;
    }

    std::uint64_t unsigned_at(const json& v, const Path& path) const {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            fail(path, "expected a nonnegative integer");
        return v.get<std::uint64_t>();
    }

private:
    std::string_view text_;
    Locator locator_;
    json root_;
};

Path extend(Path p, PathStep step) {
    p.push_back(std::move(step));
    return p;
}

std::vector<std::uint64_t> index_list(const Document& doc, const json& arr, const Path& path) {
    if (!arr.is_array()) doc.fail(path, "expected an array of element indices");
    std::vector<std::uint64_t> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(doc.unsigned_at(arr[i], extend(path, i)));
    return out;
}

}  // namespace

PropertyCollection parse_property_json(std::string_view text) {
    const Document doc(text);
    const json& root = doc.root();
    const Path top;
    const std::uint64_t ny = doc.unsigned_at(doc.member(root, top, "ny"), {std::string("ny")});
    const TargetSpace space = doc.at({std::string("ny")}, [&] { return TargetSpace(ny); });

    const bool has_subsets = root.contains("subsets");
    const bool has_counts = root.contains("counts");
    if (has_subsets == has_counts) doc.fail(top, "exactly one of \"subsets\" or \"counts\" is required");

    if (has_subsets) {
        const Path sp{std::string("subsets")};
        const json& arr = root.at("subsets");
        if (!arr.is_array()) doc.fail(sp, "expected an array of subsets");
        std::vector<TargetSubset> subsets;
        subsets.reserve(arr.size());
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const Path ip = extend(sp, i);
            auto members = index_list(doc, arr[i], ip);
            subsets.push_back(doc.at(ip, [&] { return TargetSubset(std::move(members), space); }));
        }
        return doc.at(sp, [&] { return PropertyCollection::from_subsets(space, std::move(subsets)); });
    }

    const Path cp{std::string("counts")};
    const json& obj = root.at("counts");
    if (!obj.is_object()) doc.fail(cp, "expected an object mapping cardinality to count");
    DensityCounts counts;
    for (const auto& [key, value] : obj.items()) {
        const Path kp = extend(cp, key);
        std::uint64_t k = 0;
        doc.at(kp, [&] {
            std::size_t used = 0;
            k = std::stoull(key, &used);
            if (used != key.size()) throw DomainError("cardinality key must be a decimal integer");
            return 0;
        });
        BigCount c;
        if (value.is_string()) c = doc.at(kp, [&] { return parse_count(value.get<std::string>()); });
        else c = BigCount(doc.unsigned_at(value, kp));
        if (counts.contains(k)) doc.fail(kp, "cardinality listed twice");
        counts.emplace(k, std::move(c));
    }
    return doc.at(cp, [&] { return PropertyCollection::from_counts(space, std::move(counts)); });
}

json property_to_json(const PropertyCollection& x) {
    json out;
    out["ny"] = x.space().size();
    if (x.is_explicit()) {
        json arr = json::array();
        for (const auto& s : x.subsets()) arr.push_back(std::vector<std::uint64_t>(s.members().begin(), s.members().end()));
        out["subsets"] = std::move(arr);
    } else {
        json obj = json::object();
        for (const auto& [k, c] : x.counts()) obj[std::to_string(k)] = format_count(c);
        out["counts"] = std::move(obj);
    }
    return out;
}

TargetSubset parse_target_json(std::string_view text, const TargetSpace& space) {
    const Document doc(text);
    const json& root = doc.root();
    Path path;
    const json* arr = &root;
    if (root.is_object()) {
        arr = &doc.member(root, path, "target");
        path.emplace_back(std::string("target"));
    }
    auto members = index_list(doc, *arr, path);
    return doc.at(path, [&] { return TargetSubset(std::move(members), space); });
}

FunctionClass parse_class_json(std::string_view text) {
    const Document doc(text);
    const json& root = doc.root();
    const std::uint64_t n = doc.unsigned_at(doc.member(root, {}, "n"), {std::string("n")});
    const Path cp{std::string("class")};
    const auto raw = index_list(doc, doc.member(root, {}, "class"), cp);
    std::vector<BinaryFunc> members;
    members.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] > 0xffffffffULL) doc.fail(extend(cp, i), "function encoding out of range");
        members.push_back(static_cast<BinaryFunc>(raw[i]));
    }
    if (n > kMaxDomain) doc.fail({std::string("n")}, "n must be at most 24");
    return doc.at(cp, [&] { return FunctionClass(static_cast<unsigned>(n), std::move(members)); });
}

json class_to_json(const FunctionClass& g) { return json{{"n", g.n()}, {"class", g.members()}}; }

LabeledSample parse_sample_json(std::string_view text) {
    const Document doc(text);
    const json& root = doc.root();
    const Path sp{std::string("sample")};
    const json& arr = doc.member(root, {}, "sample");
    if (!arr.is_array()) doc.fail(sp, "expected an array of [point, label] pairs");
    std::vector<std::pair<unsigned, bool>> pairs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Path ip = extend(sp, i);
        if (!arr[i].is_array() || arr[i].size() != 2) doc.fail(ip, "expected a [point, label] pair");
        const std::uint64_t pt = doc.unsigned_at(arr[i][0], extend(ip, std::size_t{0}));
        const std::uint64_t label = doc.unsigned_at(arr[i][1], extend(ip, std::size_t{1}));
        if (label > 1) doc.fail(extend(ip, std::size_t{1}), "labels must be 0 or 1");
        if (pt == 0 || pt > kMaxDomain) doc.fail(extend(ip, std::size_t{0}), "points are 1-based and at most 24");
        pairs.emplace_back(static_cast<unsigned>(pt), label == 1);
    }
    return doc.at(sp, [&] { return LabeledSample(std::move(pairs)); });
}

json sample_to_json(const LabeledSample& s) {
    json arr = json::array();
    for (const auto& [pt, label] : s.pairs()) arr.push_back({pt, label ? 1 : 0});
    return json{{"sample", std::move(arr)}};
}

json report_to_json(const InfoReport& r) {
    json out;
    out["I"] = r.information_bits;
    out["H"] = r.conditional_entropy_bits;
    out["l"] = r.description_bits;
    out["kappa"] = r.cost ? json(*r.cost) : json(nullptr);
    out["eta"] = r.efficiency ? json(*r.efficiency) : json(nullptr);
    out["method"] = r.method;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

json estimate_to_json(const McEstimate& e) {
    return json{{"estimate", e.estimate}, {"stderr", e.std_error}, {"trials", e.trials}, {"seed", e.seed}};
}

}  // namespace infowidth

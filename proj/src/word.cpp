#include "gfo/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gfo {

namespace {

void validate_entries(const std::vector<int>& entries) {
    for (int e : entries) {
        if (e < 1) throw std::invalid_argument("word entries must be >= 1");
    }
}

}  // namespace

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
    validate_entries(entries_);
}

Word::Word(std::initializer_list<int> entries) : entries_(entries) {
    validate_entries(entries_);
}

Word Word::parse(const std::string& text) {
    std::vector<int> entries;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            std::string field = text.substr(pos, comma - pos);
            if (!field.empty()) {
                size_t used = 0;
                int v = std::stoi(field, &used);
                if (used != field.size())
                    throw std::invalid_argument("bad word entry: '" + field + "'");
                entries.push_back(v);
            } else if (comma != text.size()) {
                throw std::invalid_argument("empty entry in word: '" + text + "'");
            }
            pos = comma + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument(
                    "compact word must use digits 1-9; got '" + text + "'");
            entries.push_back(ch - '0');
        }
    }
    return Word(std::move(entries));
}

int Word::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string Word::str() const {
    bool compact = std::all_of(entries_.begin(), entries_.end(),
                               [](int e) { return e <= 9; });
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(entries_[i]);
    }
    // A lone multi-digit entry needs the comma form too, or it would re-parse
    // as a compact digit word ("12" means (1,2); the letter 12 is "12,").
    if (!compact && entries_.size() == 1) out += ',';
    return out;
}

bool Word::operator<(const Word& other) const {
    int wa = weight(), wb = other.weight();
    if (wa != wb) return wa < wb;
    if (entries_.size() != other.entries_.size())
        return entries_.size() < other.entries_.size();
    return entries_ < other.entries_;
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

bool dominates(const Word& v, const Word& u) {
    if (v.length() != u.length()) return false;
    for (int i = 0; i < v.length(); ++i) {
        if (v.at(i) < u.at(i)) return false;
    }
    return true;
}

std::vector<int> em_set(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("em_set: empty pattern");
    std::vector<int> indices;
    const int k = u.length();
    for (int start = 0; start + k <= w.length(); ++start) {
        bool dom = true;
        for (int j = 0; j < k; ++j) {
            if (w.at(start + j) < u.at(j)) {
                dom = false;
                break;
            }
        }
        if (dom) indices.push_back(start + 1);
    }
    return indices;
}

int occurrence_count(const Word& u, const Word& w) {
    return static_cast<int>(em_set(u, w).size());
}

Partition partition_of(const Word& u) {
    if (u.empty()) throw std::invalid_argument("partition_of: empty word");
    Partition p{u.entries()};
    std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
    return p;
}

Word reverse(const Word& u) {
    std::vector<int> e(u.entries().rbegin(), u.entries().rend());
    return Word(std::move(e));
}

Word prepend_one(const Word& u) {
    std::vector<int> e;
    e.reserve(u.entries().size() + 1);
    e.push_back(1);
    e.insert(e.end(), u.entries().begin(), u.entries().end());
    return Word(std::move(e));
}

Word plus_one(const Word& u) {
    std::vector<int> e = u.entries();
    for (int& v : e) ++v;
    return Word(std::move(e));
}

}  // namespace gfo

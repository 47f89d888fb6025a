#ifndef GFO_WORD_HPP
#define GFO_WORD_HPP

#include <string>
#include <vector>

namespace gfo {

// A word over the positive integers. Patterns and ambient words alike.
// Entries are 1-based in all position reporting (Em indices).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> entries);
    Word(std::initializer_list<int> entries);

    // Accepts a compact digit string ("3123", entries 1..9 only) or
    // comma-separated decimal entries ("10,1,2,3").
    static Word parse(const std::string& text);

    int length() const { return static_cast<int>(entries_.size()); }
    int weight() const;
    bool empty() const { return entries_.empty(); }
    int at(int i) const { return entries_[static_cast<size_t>(i)]; }  // 0-based

    const std::vector<int>& entries() const { return entries_; }
    std::vector<int>::const_iterator begin() const { return entries_.begin(); }
    std::vector<int>::const_iterator end() const { return entries_.end(); }

    // Compact digits when all entries are <= 9, comma-separated otherwise.
    std::string str() const;

    bool operator==(const Word&) const = default;
    // Orders by (weight, length, lexicographic); the enumeration order.
    bool operator<(const Word& other) const;

private:
    std::vector<int> entries_;
};

// Weakly decreasing positive parts; the sorted letter multiset of a word.
struct Partition {
    std::vector<int> parts;

    bool operator==(const Partition&) const = default;
    std::string str() const;
};

// v dominates u: same length and v_i >= u_i entrywise.
bool dominates(const Word& v, const Word& u);

// 1-based start indices of windows of w dominating u. Pattern must be nonempty.
std::vector<int> em_set(const Word& u, const Word& w);

int occurrence_count(const Word& u, const Word& w);

Partition partition_of(const Word& u);

Word reverse(const Word& u);
Word prepend_one(const Word& u);   // 1u
Word plus_one(const Word& u);      // u+, every entry incremented

}  // namespace gfo

#endif

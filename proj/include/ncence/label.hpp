#ifndef NCENCE_LABEL_HPP
#define NCENCE_LABEL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "ncence/errors.hpp"

namespace ncence {

/// Node identifier. Unique within one graph; carries no meaning beyond
/// identity (every operation is invariant under id renaming).
using NodeId = std::uint32_t;

inline bool is_label_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '#';
}

inline bool is_valid_label_text(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text)
        if (!is_label_char(c)) return false;
    return true;
}

/// A node label, edge label, or production name: a nonempty string over
/// [A-Za-z0-9_#]. Labels starting with '#' are reserved for machinery
/// (the erased label "#u", fresh markers "#x1", ...).
class Label {
public:
    explicit Label(std::string text) : text_(std::move(text)) {
        if (!is_valid_label_text(text_))
            throw InvalidLabel("invalid label: \"" + text_ + "\"");
    }

    const std::string& str() const { return text_; }
    bool reserved() const { return text_.front() == '#'; }

    auto operator<=>(const Label&) const = default;

private:
    std::string text_;
};

inline std::ostream& operator<<(std::ostream& os, const Label& l) {
    return os << l.str();
}

} // namespace ncence

#endif // NCENCE_LABEL_HPP

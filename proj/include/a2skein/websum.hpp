#pragma once

/// Formal linear combinations of web diagrams with QRational coefficients,
/// keyed by the canonical form of the diagram.

#include <map>
#include <string>
#include <utility>

#include "qlaurent.hpp"
#include "web.hpp"

namespace a2skein {

class WebSum {
public:
    struct Term {
        WebDiagram diagram;
        QRational coeff;
    };
    using Map = std::map<std::string, Term>;

    WebSum() = default;

    static WebSum single(WebDiagram d, QRational c = QRational(1)) {
        WebSum s;
        s.add(std::move(d), std::move(c));
        return s;
    }

    void add(WebDiagram d, QRational c) {
        if (c.is_zero()) return;
        d.compact();
        std::string key = canonical_key(d);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), Term{std::move(d), std::move(c)});
        } else {
            it->second.coeff += c;
            if (it->second.coeff.is_zero()) terms_.erase(it);
        }
    }

    void add(const WebSum& o) {
        for (auto& [k, t] : o.terms_) add(t.diagram, t.coeff);
    }

    void scale(const QRational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [k, t] : terms_) t.coeff *= c;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const WebSum& a, const WebSum& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (ia->second.coeff != ib->second.coeff) return false;
        }
        return true;
    }
    friend bool operator!=(const WebSum& a, const WebSum& b) { return !(a == b); }

private:
    Map terms_;
};

} // namespace a2skein

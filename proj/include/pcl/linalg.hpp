#pragma once

#include "pcl/rat.hpp"

#include <map>

namespace pcl {

// Incrementally maintained reduced row-echelon space of sparse rational
// rows. Each stored row is normalized: its pivot (smallest column index) has
// coefficient 1 and appears in no other stored row.
class RowSpace {
  public:
    using Row = std::map<int, Rat>;

    // Residue of r modulo the current row space.
    Row reduce(Row r) const {
        while (!r.empty()) {
            auto it = rows_.find(r.begin()->first);
            if (it == rows_.end()) {
                // pivot columns all exceed entries already scanned; try the
                // next candidate entry
                bool hit = false;
                for (auto& [col, c] : r) {
                    auto jt = rows_.find(col);
                    if (jt != rows_.end()) {
                        subtract(r, jt->second, c);
                        hit = true;
                        break;
                    }
                }
                if (!hit) break;
            } else {
                subtract(r, it->second, r.begin()->second);
            }
        }
        return r;
    }

    // Returns true if the row was independent (rank grew).
    bool add_row(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        int pivot = r.begin()->first;
        Rat lead = r.begin()->second;
        for (auto& [c, v] : r) v /= lead;
        for (auto& [p, row] : rows_) {
            auto it = row.find(pivot);
            if (it != row.end()) subtract(row, r, it->second);
        }
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    int rank() const { return (int)rows_.size(); }
    const std::map<int, Row>& rows() const { return rows_; }
    bool has_pivot(int col) const { return rows_.count(col) != 0; }

  private:
    static void subtract(Row& r, const Row& src, Rat factor) {
        for (auto& [col, c] : src) {
            auto [it, fresh] = r.try_emplace(col, 0);
            it->second -= factor * c;
            if (it->second == 0) r.erase(it);
        }
    }

    std::map<int, Row> rows_; // pivot column -> row
};

} // namespace pcl

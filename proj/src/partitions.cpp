#include "lring/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: '" + text + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::multiplicity(int value) const {
    if (value < 1) throw std::invalid_argument("part value must be >= 1");
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    cols.reserve(max_part());
    for (int j = 1; j <= max_part(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        cols.push_back(count);
    }
    return Partition(cols);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> r;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) r.push_back({i, j});
    return r;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Integer z_mu(const Partition& p) {
    Integer z = 1;
    for (int value = 1; value <= p.max_part(); ++value) {
        int m = p.multiplicity(value);
        for (int k = 0; k < m; ++k) z *= value;
        z *= factorial_int(m);
    }
    return z;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& current,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        current.push_back(next);
        enumerate_rec(remaining - next, next, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, n, current, out);
    return out;
}

}  // namespace lring

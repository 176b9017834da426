// Young diagrams as weakly decreasing parts, multiplicity vectors, Maya
// sequences and Frobenius coordinates.
#pragma once

#include <string>
#include <vector>

namespace symfock {

using Partition = std::vector<int>;
using Multiplicities = std::vector<int>;  // m[j-1] = number of parts equal to j

bool is_partition(const Partition& p);
int weight(const Partition& p);
void validate_partition(const Partition& p);  // throws std::invalid_argument

Multiplicities partition_to_multiplicities(const Partition& p);
Partition multiplicities_to_partition(const Multiplicities& m);

// Maya sequence k_1 > k_2 > ... with k_j = -j for j beyond the head. The
// head never ends in an entry already equal to its tail value.
struct MayaIndex {
    std::vector<int> head;

    int at(int j) const;  // k_j, 1-based
    int energy() const;
    int charge() const;
    bool operator==(const MayaIndex& o) const { return head == o.head; }
    bool operator<(const MayaIndex& o) const { return head < o.head; }
};

MayaIndex normalize_maya(std::vector<int> head);  // trims, checks strictly decreasing
MayaIndex partition_to_maya(const Partition& p);
Partition maya_to_partition(const MayaIndex& k);  // requires charge zero

// u = entries k_j >= 0; v = positive integers -l for negative l missing from k.
struct FrobeniusCoords {
    std::vector<int> u;
    std::vector<int> v;
    bool operator==(const FrobeniusCoords& o) const { return u == o.u && v == o.v; }
};

FrobeniusCoords maya_to_frobenius(const MayaIndex& k);
MayaIndex frobenius_to_maya(const FrobeniusCoords& f);

// All partitions of n in reverse lexicographic order.
const std::vector<Partition>& enumerate_partitions(int n);
int partition_index(const Partition& p);  // position within enumerate_partitions(|p|)
Partition conjugate(const Partition& p);

std::string partition_str(const Partition& p);  // "(2,1)"
Partition parse_partition(const std::string& s);

}  // namespace symfock

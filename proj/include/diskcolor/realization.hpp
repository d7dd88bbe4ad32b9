#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diskcolor/geometry.hpp"
#include "diskcolor/hypergraph.hpp"

namespace diskcolor {

// A disk together with the hyperedge it realizes. `exposed` is a tracked
// rational boundary point known to avoid the closure of every other disk;
// extensions consume it.
struct TaggedDisk {
    Circle circle;
    std::vector<int> edge;
    std::optional<Point> exposed;

    TaggedDisk(Circle c, std::vector<int> e, std::optional<Point> x = std::nullopt)
        : circle(std::move(c)), edge(std::move(e)), exposed(std::move(x)) {
        std::sort(edge.begin(), edge.end());
    }
};

// Points with an index correspondence to the target hypergraph's vertices
// (points[i] <-> vertex i), plus the disk family split into sibling and
// descendent disks. For tree constructions the anchor circle is the paper's
// C and `prescribed` holds the q_i; extension outputs keep the anchor of
// their base realization and are not stabbed.
struct Realization {
    std::vector<Point> points;
    std::vector<TaggedDisk> sibling_disks;
    std::vector<TaggedDisk> descendent_disks;
    Circle anchor_circle;
    Rational gamma;
    Hypergraph target;
    bool stabbed = false;
    std::vector<Point> prescribed;

    Realization(Circle anchor, Rational g, Hypergraph tgt)
        : anchor_circle(std::move(anchor)), gamma(std::move(g)), target(std::move(tgt)) {}

    std::vector<const TaggedDisk*> all_disks() const {
        std::vector<const TaggedDisk*> out;
        for (const auto& d : sibling_disks) out.push_back(&d);
        for (const auto& d : descendent_disks) out.push_back(&d);
        return out;
    }

    std::vector<Circle> all_circles() const {
        std::vector<Circle> out;
        for (const auto* d : all_disks()) out.push_back(d->circle);
        return out;
    }

    std::size_t max_coordinate_bits() const {
        std::size_t bits = 0;
        for (const auto& p : points) bits = std::max(bits, bit_size(p));
        for (const auto* d : all_disks()) bits = std::max(bits, bit_size(d->circle));
        return bits;
    }
};

} // namespace diskcolor

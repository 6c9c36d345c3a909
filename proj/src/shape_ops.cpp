#include "movable/error.hpp"
#include "movable/shapes.hpp"

namespace movable {

bool resize_rect(Rect& rect, const Handle& handle, Point pointer, const EditContext& ctx) {
    switch (rect.resize(handle, pointer, ctx)) {
        case EditResult::Applied: return true;
        case EditResult::Rejected: return false;
        case EditResult::Vanished:
            throw Error(ErrorCode::Vanished, "rectangle '" + rect.id() + "' collapsed");
    }
    return false;
}

bool scale_uniform(MovableObject& object, Point before, Point pointer, const EditContext& ctx) {
    if (!is_finite(before) || !is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    if (auto* c = dynamic_cast<Circle*>(&object)) return c->scale_uniform(before, pointer, ctx);
    if (auto* r = dynamic_cast<Ring*>(&object)) return r->scale_uniform(before, pointer, ctx);
    if (auto* c = dynamic_cast<Crescent*>(&object)) return c->scale_uniform(before, pointer, ctx);
    if (auto* p = dynamic_cast<RegularPolygon*>(&object)) return p->scale_uniform(before, pointer, ctx);
    if (auto* p = dynamic_cast<ConvexPolygon*>(&object)) return p->scale_uniform(before, pointer, ctx);
    if (auto* p = dynamic_cast<ChatoyantPolygon*>(&object)) return p->scale_uniform(before, pointer, ctx);
    return false;
}

void reconfigure_vertex(MovableObject& object, std::size_t index, Point pointer, const EditContext& ctx) {
    if (auto* p = dynamic_cast<ChatoyantPolygon*>(&object)) {
        p->reconfigure_vertex(index, pointer);
    } else if (auto* c = dynamic_cast<ConvexPolygon*>(&object)) {
        c->reconfigure_vertex(index, pointer, ctx);
    } else if (auto* l = dynamic_cast<SegmentedLine*>(&object)) {
        l->reconfigure_vertex(index, pointer, ctx);
    } else if (auto* h = dynamic_cast<SimpleHouse*>(&object)) {
        h->move_apex(pointer, ctx);
    } else {
        throw Error(ErrorCode::InvalidGeometry, "object '" + object.id() + "' has no free vertices");
    }
}

void rotate_object(MovableObject& object, Point pivot, Angle delta) { object.rotate(pivot, delta); }

void resize_ring(Ring& ring, RingBoundary boundary, Point pointer, const EditContext& ctx) {
    ring.resize(boundary, pointer, ctx);
}

void resize_sector(Sector& sector, SectorPart part, Point pointer, const EditContext& ctx) {
    sector.resize(part, pointer, ctx);
}

void slide_partition(MovableObject& container, std::size_t index, Point pointer) {
    if (auto* r = dynamic_cast<Rect*>(&container)) {
        r->slide_partition(index, pointer);
    } else if (auto* g = dynamic_cast<Ring*>(&container)) {
        g->slide_partition(index, pointer);
    } else {
        throw Error(ErrorCode::InvalidGeometry, "object '" + container.id() + "' has no partitions");
    }
}

}  // namespace movable

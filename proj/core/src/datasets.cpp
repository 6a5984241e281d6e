#include "affnet/datasets.hpp"

#include <sstream>

#include "affnet/errors.hpp"

namespace affnet::datasets {

namespace {

// Five women and five informal activities from the Deep South study of
// Davis, Gardner and Gardner (1941), fig. 11 ("the structure of a clique").
// Events 1 and 2 are known from the source only up to their attendee sets;
// the numbering here fixes the order used throughout the test fixtures.
constexpr const char* kDg2 = R"(actor,event
A,1
A,3
A,4
B,3
B,4
C,1
C,2
C,5
D,1
D,2
D,3
E,2
E,4
E,5
)";

// Eighteen women and fourteen dated social events observed in Old City in
// 1936 (Davis, Gardner and Gardner 1941); the widely used transcription of
// the attendance table, with the event dates reported there.
constexpr const char* kDg1 = R"(actor,event,time
Evelyn,E1,1936-06-27
Evelyn,E2,1936-03-02
Evelyn,E3,1936-04-12
Evelyn,E4,1936-09-26
Evelyn,E5,1936-02-25
Evelyn,E6,1936-05-19
Evelyn,E8,1936-09-16
Evelyn,E9,1936-04-08
Laura,E1,1936-06-27
Laura,E2,1936-03-02
Laura,E3,1936-04-12
Laura,E5,1936-02-25
Laura,E6,1936-05-19
Laura,E7,1936-03-15
Laura,E8,1936-09-16
Theresa,E2,1936-03-02
Theresa,E3,1936-04-12
Theresa,E4,1936-09-26
Theresa,E5,1936-02-25
Theresa,E6,1936-05-19
Theresa,E7,1936-03-15
Theresa,E8,1936-09-16
Theresa,E9,1936-04-08
Brenda,E1,1936-06-27
Brenda,E3,1936-04-12
Brenda,E4,1936-09-26
Brenda,E5,1936-02-25
Brenda,E6,1936-05-19
Brenda,E7,1936-03-15
Brenda,E8,1936-09-16
Charlotte,E3,1936-04-12
Charlotte,E4,1936-09-26
Charlotte,E5,1936-02-25
Charlotte,E7,1936-03-15
Frances,E3,1936-04-12
Frances,E5,1936-02-25
Frances,E6,1936-05-19
Frances,E8,1936-09-16
Eleanor,E5,1936-02-25
Eleanor,E6,1936-05-19
Eleanor,E7,1936-03-15
Eleanor,E8,1936-09-16
Pearl,E6,1936-05-19
Pearl,E8,1936-09-16
Pearl,E9,1936-04-08
Ruth,E5,1936-02-25
Ruth,E7,1936-03-15
Ruth,E8,1936-09-16
Ruth,E9,1936-04-08
Verne,E7,1936-03-15
Verne,E8,1936-09-16
Verne,E9,1936-04-08
Verne,E12,1936-04-07
Myra,E8,1936-09-16
Myra,E9,1936-04-08
Myra,E10,1936-06-10
Myra,E12,1936-04-07
Katherina,E8,1936-09-16
Katherina,E9,1936-04-08
Katherina,E10,1936-06-10
Katherina,E12,1936-04-07
Katherina,E13,1936-11-21
Katherina,E14,1936-08-03
Sylvia,E7,1936-03-15
Sylvia,E8,1936-09-16
Sylvia,E9,1936-04-08
Sylvia,E10,1936-06-10
Sylvia,E12,1936-04-07
Sylvia,E13,1936-11-21
Sylvia,E14,1936-08-03
Nora,E6,1936-05-19
Nora,E7,1936-03-15
Nora,E9,1936-04-08
Nora,E10,1936-06-10
Nora,E11,1936-02-23
Nora,E12,1936-04-07
Nora,E13,1936-11-21
Nora,E14,1936-08-03
Helen,E7,1936-03-15
Helen,E8,1936-09-16
Helen,E10,1936-06-10
Helen,E11,1936-02-23
Helen,E12,1936-04-07
Dorothy,E8,1936-09-16
Dorothy,E9,1936-04-08
Olivia,E9,1936-04-08
Olivia,E11,1936-02-23
Flora,E9,1936-04-08
Flora,E11,1936-02-23
)";

// Four synthetic four-actor networks with the same one-mode projection (a
// triangle i, j, k with a pendant l on k) but different triadic structure
// at {i, j, k}: three exclusive events, one inclusive event, exclusive
// events with a doubled pair, and a tripled inclusive event.
constexpr const char* kKiteA = R"(actor,event
i,1
i,3
j,1
j,2
k,2
k,3
k,4
l,4
)";

constexpr const char* kKiteB = R"(actor,event
i,1
j,1
k,1
k,2
l,2
)";

constexpr const char* kKiteC = R"(actor,event
i,1
i,3
i,4
j,1
j,2
k,2
k,3
k,4
k,5
l,5
)";

constexpr const char* kKiteD = R"(actor,event
i,1
i,2
i,3
j,1
j,2
j,3
k,1
k,2
k,3
k,4
l,4
)";

struct Entry {
    const char* name;
    const char* description;
    const char* data;
};

constexpr Entry kEntries[] = {
    {"dg2", "Five women, five activities (Davis/Gardner/Gardner 1941, clique table)", kDg2},
    {"dg1", "Eighteen women, fourteen dated events (Davis/Gardner/Gardner 1941)", kDg1},
    {"kite-a", "Kite projection from three pairwise-exclusive events", kKiteA},
    {"kite-b", "Kite projection from a single inclusive event", kKiteB},
    {"kite-c", "Kite projection with a doubled exclusive pair", kKiteC},
    {"kite-d", "Kite projection from a tripled inclusive event", kKiteD},
};

}  // namespace

std::vector<Info> list() {
    std::vector<Info> out;
    for (const auto& e : kEntries) out.push_back({e.name, e.description});
    return out;
}

std::string csv(const std::string& name) {
    for (const auto& e : kEntries)
        if (name == e.name) return e.data;
    throw DataError("unknown dataset '" + name + "'");
}

BipartiteGraph load(const std::string& name) {
    std::istringstream in(csv(name));
    return load_csv(in).graph;
}

BipartiteGraph biclique(int n_actors, int n_events) {
    GraphBuilder b;
    for (int a = 0; a < n_actors; ++a) b.add_actor("a" + std::to_string(a + 1));
    for (int e = 0; e < n_events; ++e) {
        const int ev = b.add_event("e" + std::to_string(e + 1));
        for (int a = 0; a < n_actors; ++a) b.add_attendance(a, ev);
    }
    return b.build();
}

}  // namespace affnet::datasets

#include <doctest.h>

#include <fstream>
#include <set>

#include "variantlab/game_record.hpp"

using namespace vlab;

// Transcribed reference games (one per line, same JSON-lines schema as our
// generated sets). Every game must replay fully legally and end on its stated
// result. The corpus spans all nine non-classical rule sets.
TEST_CASE("reference game corpus replays legally") {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/conformance/games.jsonl");
    REQUIRE_MESSAGE(in.good(), "missing conformance corpus");
    std::vector<GameRecord> games = readGameRecords(in);
    CHECK(games.size() >= 15);

    std::set<VariantId> covered;
    for (std::size_t i = 0; i < games.size(); ++i) {
        const GameRecord& g = games[i];
        CAPTURE(i);
        CAPTURE(variantName(g.variant.id));
        REQUIRE_NOTHROW(replayRecord(g));
        CHECK_FALSE(g.moves.empty());
        covered.insert(g.variant.id);
    }
    for (VariantId id : allVariants())
        if (id != VariantId::Classical) {
            CAPTURE(variantName(id));
            CHECK(covered.count(id) == 1);
        }
}

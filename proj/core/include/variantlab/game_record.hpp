#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "variantlab/status.hpp"
#include "variantlab/types.hpp"
#include "variantlab/variant.hpp"

namespace vlab {

struct PlyInfo {
    std::vector<int> visits;  // over the legal moves at that ply, canonical order
    bool bySoftmax = false;
};

struct GameRecord {
    VariantConfig variant;
    std::string startFen;
    std::vector<Move> moves;
    GameStatus result;
    bool capped = false;  // hit the ply cap; result is Draw with reason None
    std::uint64_t seed = 0;
    std::optional<std::vector<PlyInfo>> perPly;
};

// Replays the record from its start FEN, validating every move. Returns the
// final position. Throws on illegal moves or a result mismatch.
Position replayRecord(const GameRecord& record);

std::string recordToJson(const GameRecord& record);
GameRecord recordFromJson(const std::string& line);

// JSON-lines, one record per line, append-friendly.
void writeGameRecords(std::ostream& out, std::span<const GameRecord> records);
std::vector<GameRecord> readGameRecords(std::istream& in);

void writeGameRecordsFile(const std::string& path, std::span<const GameRecord> records);
std::vector<GameRecord> readGameRecordsFile(const std::string& path);

}  // namespace vlab

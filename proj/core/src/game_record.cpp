#include "variantlab/game_record.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/lan.hpp"

namespace vlab {

namespace {

GameStatus statusFromNames(const std::string& result, const std::string& reason) {
    GameStatus st;
    if (result == "1-0")
        st.state = GameState::WhiteWins;
    else if (result == "0-1")
        st.state = GameState::BlackWins;
    else if (result == "1/2-1/2")
        st.state = GameState::Draw;
    else if (result == "ongoing")
        st.state = GameState::Ongoing;
    else
        throw Error(Errc::Syntax, "record: unknown result '" + result + "'");
    if (reason == "none")
        st.reason = GameReason::None;
    else if (reason == "checkmate")
        st.reason = GameReason::Checkmate;
    else if (reason == "stalemate")
        st.reason = GameReason::Stalemate;
    else if (reason == "fifty-move")
        st.reason = GameReason::FiftyMove;
    else if (reason == "threefold")
        st.reason = GameReason::ThreefoldRepetition;
    else
        throw Error(Errc::Syntax, "record: unknown reason '" + reason + "'");
    return st;
}

}  // namespace

Position replayRecord(const GameRecord& record) {
    Position pos = parseFen(record.startFen, record.variant.id);
    std::vector<std::uint64_t> history;
    for (std::size_t i = 0; i < record.moves.size(); ++i) {
        const Move& m = record.moves[i];
        MoveList legal = legalMoves(pos);
        if (std::find(legal.begin(), legal.end(), m) == legal.end())
            throw Error(Errc::IllegalMove, "record: move " + std::to_string(i + 1) + " (" +
                                               serializeLan(m) + ") is illegal");
        history.push_back(repetitionKey(pos));
        pos = applyMoveUnchecked(pos, m);
    }
    GameStatus st = status(pos, history);
    if (!st.ongoing()) {
        // The game truly ended on the board; the stored result must agree.
        if (record.capped || st != record.result)
            throw Error(Errc::Syntax, "record: stored result does not match replay");
    } else if (!record.capped && record.result.ongoing()) {
        // fine: an in-progress record
    } else if (record.capped && record.result.state != GameState::Draw) {
        throw Error(Errc::Syntax, "record: capped game must be recorded as a draw");
    }
    // A non-capped, non-terminal record with a decisive/drawn result is an
    // adjudicated game (e.g. resignation in a transcribed corpus); accepted.
    return pos;
}

std::string recordToJson(const GameRecord& record) {
    nlohmann::json j;
    j["variant"] = std::string(variantName(record.variant.id));
    j["start_fen"] = record.startFen;
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : record.moves) moves.push_back(serializeLan(m));
    j["moves"] = std::move(moves);
    j["result"] = std::string(gameStateName(record.result.state));
    j["reason"] = std::string(gameReasonName(record.result.reason));
    j["capped"] = record.capped;
    j["seed"] = record.seed;
    if (record.perPly) {
        nlohmann::json plies = nlohmann::json::array();
        for (const PlyInfo& info : *record.perPly)
            plies.push_back({{"by", info.bySoftmax ? "softmax" : "argmax"},
                             {"visits", info.visits}});
        j["per_ply"] = std::move(plies);
    }
    return j.dump();
}

GameRecord recordFromJson(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Syntax, std::string("record: bad json: ") + e.what());
    }
    try {
        GameRecord record;
        auto id = variantFromName(j.at("variant").get<std::string>());
        if (!id) throw Error(Errc::Syntax, "record: unknown variant");
        record.variant = VariantConfig::make(*id);
        record.startFen = j.at("start_fen").get<std::string>();
        record.result = statusFromNames(j.at("result").get<std::string>(),
                                        j.at("reason").get<std::string>());
        record.capped = j.value("capped", false);
        record.seed = j.value("seed", std::uint64_t{0});

        Position pos = parseFen(record.startFen, record.variant.id);
        for (const auto& moveText : j.at("moves")) {
            Move m = parseLan(moveText.get<std::string>(), pos);
            record.moves.push_back(m);
            pos = applyMoveUnchecked(pos, m);
        }
        if (j.contains("per_ply")) {
            record.perPly.emplace();
            for (const auto& entry : j["per_ply"])
                record.perPly->push_back(PlyInfo{entry.at("visits").get<std::vector<int>>(),
                                                 entry.at("by").get<std::string>() == "softmax"});
        }
        return record;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Syntax, std::string("record: ") + e.what());
    }
}

void writeGameRecords(std::ostream& out, std::span<const GameRecord> records) {
    for (const GameRecord& r : records) {
        out << recordToJson(r) << '\n';
        if (!out) throw Error(Errc::Io, "record: write failed");
    }
}

std::vector<GameRecord> readGameRecords(std::istream& in) {
    std::vector<GameRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(recordFromJson(line));
    }
    return records;
}

void writeGameRecordsFile(const std::string& path, std::span<const GameRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::Io, "record: cannot open '" + path + "' for writing");
    writeGameRecords(out, records);
}

std::vector<GameRecord> readGameRecordsFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Io, "record: cannot open '" + path + "'");
    return readGameRecords(in);
}

}  // namespace vlab

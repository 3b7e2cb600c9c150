#include "variantlab/selfplay.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"

namespace vlab {

namespace {

std::size_t sampleSoftmax(const std::vector<int>& visits, Rng& rng) {
    int maxVisits = 0;
    for (int v : visits) maxVisits = std::max(maxVisits, v);
    std::vector<double> weights(visits.size());
    for (std::size_t i = 0; i < visits.size(); ++i)
        weights[i] = std::exp(static_cast<double>(visits[i] - maxVisits));
    return rng.categorical(weights);
}

std::size_t argmaxVisits(const std::vector<int>& visits) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < visits.size(); ++i)
        if (visits[i] > visits[best]) best = i;  // ties keep the canonical-order move
    return best;
}

}  // namespace

GameRecord playGame(const VariantConfig& variant, const PriorProvider& prior,
                    const SearchConfig& cfg, const std::optional<std::string>& startFen,
                    bool recordVisits) {
    Position pos;
    if (startFen) {
        try {
            pos = parseFen(*startFen, variant.id);
        } catch (const Error& e) {
            throw Error(Errc::BadStart, std::string("bad start fen: ") + e.what());
        }
    } else {
        pos = initialPosition(variant);
    }

    GameRecord record;
    record.variant = variant;
    record.startFen = serializeFen(pos);
    record.seed = cfg.seed;
    if (recordVisits) record.perPly.emplace();

    Rng rng(cfg.seed);
    std::vector<std::uint64_t> history;
    int ply = 0;
    for (;;) {
        GameStatus st = status(pos, history);
        if (!st.ongoing()) {
            record.result = st;
            break;
        }
        if (ply >= cfg.maxGamePlies) {
            record.result = {GameState::Draw, GameReason::None};
            record.capped = true;
            break;
        }
        SearchResult sr = search(pos, prior, cfg, true, rng);
        bool softmax = ply < cfg.softmaxPlies;
        std::size_t pick = softmax ? sampleSoftmax(sr.visits, rng) : argmaxVisits(sr.visits);
        if (record.perPly) record.perPly->push_back(PlyInfo{sr.visits, softmax});
        record.moves.push_back(sr.moves[pick]);
        history.push_back(repetitionKey(pos));
        pos = applyMoveUnchecked(pos, sr.moves[pick]);
        ++ply;
    }
    return record;
}

std::vector<GameRecord> generateSet(const VariantConfig& variant, const PriorProvider& prior,
                                    const SearchConfig& cfg, int count,
                                    const GenerateOptions& options) {
    std::vector<GameRecord> records(static_cast<std::size_t>(count));
    std::atomic<int> nextIndex{0};
    std::atomic<int> done{0};
    std::mutex progressMutex;
    std::exception_ptr firstError;
    std::mutex errorMutex;

    auto worker = [&] {
        for (;;) {
            int idx = nextIndex.fetch_add(1);
            if (idx >= count) return;
            try {
                SearchConfig gameCfg = cfg;
                gameCfg.seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(idx));
                std::optional<std::string> start;
                if (!options.openingFens.empty())
                    start = options.openingFens[idx % options.openingFens.size()];
                records[idx] = playGame(variant, prior, gameCfg, start, options.recordVisits);
            } catch (...) {
                std::lock_guard lock(errorMutex);
                if (!firstError) firstError = std::current_exception();
                return;
            }
            int finished = done.fetch_add(1) + 1;
            if (options.progress) {
                std::lock_guard lock(progressMutex);
                options.progress(finished, count);
            }
        }
    };

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (firstError) std::rethrow_exception(firstError);
    return records;
}

}  // namespace vlab

// Batch front door for the variant lab: game generation, validation and the
// statistical reports, all as plain files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "variantlab/csv.hpp"
#include "variantlab/errors.hpp"
#include "variantlab/fen.hpp"
#include "variantlab/game_record.hpp"
#include "variantlab/lan.hpp"
#include "variantlab/movegen.hpp"
#include "variantlab/prior.hpp"
#include "variantlab/selfplay.hpp"
#include "variantlab/stats/combined.hpp"
#include "variantlab/stats/diversity.hpp"
#include "variantlab/stats/histogram.hpp"
#include "variantlab/stats/kl.hpp"
#include "variantlab/stats/outcomes.hpp"
#include "variantlab/stats/piece_values.hpp"
#include "variantlab/stats/utilization.hpp"
#include "variantlab/status.hpp"

namespace fs = std::filesystem;
using namespace vlab;
using namespace vlab::stats;

namespace {

constexpr const char* kVersion = "0.1.0";

VariantId variantOrThrow(const std::string& name) {
    auto id = variantFromName(name);
    if (!id) throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
    return *id;
}

std::unique_ptr<PriorProvider> makePrior(const std::string& name) {
    if (name == "uniform") return uniformPrior();
    if (name == "material") return materialPrior();
    throw CLI::ValidationError("--prior", "unknown prior '" + name + "'");
}

// Output paths resolve against VARIANTLAB_OUT when relative.
fs::path resolveOut(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) {
        if (const char* base = std::getenv("VARIANTLAB_OUT")) p = fs::path(base) / p;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
}

// Every report/run gets a manifest next to it so it can be reproduced.
void writeManifest(const fs::path& outPath, const std::string& subcommand,
                   const nlohmann::json& config) {
    nlohmann::json m;
    m["tool"] = "variantlab";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["config"] = config;
    fs::path mpath = outPath;
    mpath += ".manifest.json";
    std::ofstream out(mpath, std::ios::binary);
    if (!out) throw Error(Errc::Io, "cannot write manifest " + mpath.string());
    out << m.dump(2) << "\n";
}

std::vector<std::string> readLines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    return lines;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct SelfplayArgs {
    std::string variant = "classical";
    std::string prior = "uniform";
    std::string out = "games.jsonl";
    std::string openings;
    int games = 100;
    int sims = 256;
    int softmaxPlies = 20;
    int maxPlies = 512;
    double cPuct = 1.5;
    double noiseWeight = 0.25;
    std::uint64_t seed = 0;
    int threads = 1;
    bool recordVisits = false;
};

void addSelfplayFlags(CLI::App* cmd, SelfplayArgs& a) {
    cmd->add_option("--variant", a.variant, "rule set")->capture_default_str();
    cmd->add_option("--prior", a.prior, "uniform or material")->capture_default_str();
    cmd->add_option("--games", a.games, "number of games")->capture_default_str();
    cmd->add_option("--sims", a.sims, "simulations per move")->capture_default_str();
    cmd->add_option("--softmax-plies", a.softmaxPlies)->capture_default_str();
    cmd->add_option("--max-plies", a.maxPlies)->capture_default_str();
    cmd->add_option("--cpuct", a.cPuct)->capture_default_str();
    cmd->add_option("--noise-weight", a.noiseWeight, "root Dirichlet noise mix")
        ->capture_default_str();
    cmd->add_option("--seed", a.seed)->capture_default_str();
    cmd->add_option("--threads", a.threads)->capture_default_str();
    cmd->add_flag("--record-visits", a.recordVisits, "store per-ply visit counts");
}

std::vector<GameRecord> runSelfplay(const SelfplayArgs& a,
                                    const std::vector<std::string>& openings) {
    SearchConfig cfg;
    cfg.simulations = a.sims;
    cfg.cPuct = a.cPuct;
    cfg.rootNoiseWeight = a.noiseWeight;
    cfg.softmaxPlies = a.softmaxPlies;
    cfg.maxGamePlies = a.maxPlies;
    cfg.seed = a.seed;
    auto prior = makePrior(a.prior);
    GenerateOptions opt;
    opt.threads = a.threads;
    opt.recordVisits = a.recordVisits;
    opt.openingFens = openings;
    int done = 0;
    opt.progress = [&](int finished, int total) {
        if (finished == total || finished - done >= 25) {
            done = finished;
            std::cerr << "\r" << finished << "/" << total << " games" << std::flush;
            if (finished == total) std::cerr << "\n";
        }
    };
    return generateSet(VariantConfig::make(variantOrThrow(a.variant)), *prior, cfg, a.games, opt);
}

nlohmann::json selfplayConfigJson(const SelfplayArgs& a) {
    return {{"variant", a.variant},       {"prior", a.prior},
            {"games", a.games},           {"sims", a.sims},
            {"softmax_plies", a.softmaxPlies}, {"max_plies", a.maxPlies},
            {"cpuct", a.cPuct},           {"noise_weight", a.noiseWeight},
            {"seed", a.seed},             {"threads", a.threads},
            {"openings", a.openings},     {"record_visits", a.recordVisits}};
}

int runMain(int argc, char** argv) {
    CLI::App app{"chess-variant laboratory"};
    app.require_subcommand(1);

    // ---- perft ----
    auto* perftCmd = app.add_subcommand("perft", "count leaf nodes of the move tree");
    std::string perftVariant = "classical", perftFen;
    int perftDepth = 1;
    perftCmd->add_option("--variant", perftVariant)->capture_default_str();
    perftCmd->add_option("--depth", perftDepth)->required();
    perftCmd->add_option("--fen", perftFen, "start position, default initial");

    // ---- selfplay ----
    auto* selfplayCmd = app.add_subcommand("selfplay", "generate a set of self-play games");
    SelfplayArgs sp;
    addSelfplayFlags(selfplayCmd, sp);
    selfplayCmd->add_option("--out", sp.out, "games.jsonl path")->capture_default_str();
    selfplayCmd->add_option("--openings", sp.openings, "file with one start FEN per line");

    // ---- replay ----
    auto* replayCmd = app.add_subcommand("replay", "validate a games file move by move");
    std::string replayIn;
    replayCmd->add_option("--in", replayIn)->required();

    // ---- outcomes ----
    auto* outcomesCmd = app.add_subcommand("outcomes", "posterior comparison of two game sets");
    std::string outcomesA, outcomesB, outcomesOut = "outcomes.csv";
    std::int64_t outcomesSamples = 100000;
    std::uint64_t outcomesSeed = 0;
    outcomesCmd->add_option("--a", outcomesA)->required();
    outcomesCmd->add_option("--b", outcomesB)->required();
    outcomesCmd->add_option("--samples", outcomesSamples)->capture_default_str();
    outcomesCmd->add_option("--seed", outcomesSeed)->capture_default_str();
    outcomesCmd->add_option("--out", outcomesOut)->capture_default_str();

    // ---- diversity ----
    auto* divCmd = app.add_subcommand("diversity", "move-sequence entropy and candidate counts");
    std::string divVariant = "classical", divPrior = "uniform", divOut = "diversity.csv";
    int divMaxPly = 20, divSamples = 10000;
    std::uint64_t divSeed = 0;
    divCmd->add_option("--variant", divVariant)->capture_default_str();
    divCmd->add_option("--prior", divPrior)->capture_default_str();
    divCmd->add_option("--max-ply", divMaxPly)->capture_default_str();
    divCmd->add_option("--samples", divSamples)->capture_default_str();
    divCmd->add_option("--seed", divSeed)->capture_default_str();
    divCmd->add_option("--out", divOut)->capture_default_str();

    // ---- kl ----
    auto* klCmd = app.add_subcommand("kl", "relative entropy between two variants' priors");
    std::string klP = "classical", klQ = "torpedo", klPrior = "uniform";
    int klMaxPly = 20, klSamples = 10000;
    std::uint64_t klSeed = 0;
    bool klExact = false;
    klCmd->add_option("--variant-p", klP)->capture_default_str();
    klCmd->add_option("--variant-q", klQ)->capture_default_str();
    klCmd->add_option("--prior", klPrior)->capture_default_str();
    klCmd->add_option("--max-ply", klMaxPly)->capture_default_str();
    klCmd->add_option("--samples", klSamples)->capture_default_str();
    klCmd->add_option("--seed", klSeed)->capture_default_str();
    klCmd->add_flag("--exact", klExact, "full tree sum (small depths only)");

    // ---- candidates ----
    auto* candCmd = app.add_subcommand("candidates",
                                       "additional candidate moves under a combined prior");
    std::string candP = "classical", candQ = "torpedo", candPrior = "uniform",
                candOut = "candidates.csv";
    int candMaxPly = 20, candSamples = 1000;
    std::uint64_t candSeed = 0;
    candCmd->add_option("--variant-p", candP)->capture_default_str();
    candCmd->add_option("--variant-q", candQ)->capture_default_str();
    candCmd->add_option("--prior", candPrior)->capture_default_str();
    candCmd->add_option("--max-ply", candMaxPly)->capture_default_str();
    candCmd->add_option("--samples", candSamples)->capture_default_str();
    candCmd->add_option("--seed", candSeed)->capture_default_str();
    candCmd->add_option("--out", candOut)->capture_default_str();

    // ---- piece-values ----
    auto* pvCmd = app.add_subcommand("piece-values", "fit material weights from game outcomes");
    std::string pvIn, pvOut = "piece_values.csv";
    int pvStartPly = 20;
    bool pvOnePerGame = false;
    std::uint64_t pvSeed = 0;
    pvCmd->add_option("--in", pvIn)->required();
    pvCmd->add_option("--start-ply", pvStartPly)->capture_default_str();
    pvCmd->add_flag("--one-per-game", pvOnePerGame, "sample one position per game");
    pvCmd->add_option("--seed", pvSeed)->capture_default_str();
    pvCmd->add_option("--out", pvOut)->capture_default_str();

    // ---- utilization ----
    auto* utilCmd = app.add_subcommand("utilization", "special-move usage report");
    std::string utilIn, utilOut = "utilization.csv";
    utilCmd->add_option("--in", utilIn)->required();
    utilCmd->add_option("--out", utilOut)->capture_default_str();

    // ---- lengths ----
    auto* lenCmd = app.add_subcommand("lengths", "game-length histogram");
    std::string lenIn, lenOut = "lengths.csv";
    int lenBucket = 10;
    lenCmd->add_option("--in", lenIn)->required();
    lenCmd->add_option("--bucket", lenBucket)->capture_default_str();
    lenCmd->add_option("--out", lenOut)->capture_default_str();

    // ---- opening-eval ----
    auto* openCmd = app.add_subcommand("opening-eval",
                                       "win/draw/loss bars for fixed opening positions");
    SelfplayArgs oe;
    oe.games = 50;
    std::string oeFens, oeOut = "opening_eval.csv";
    addSelfplayFlags(openCmd, oe);
    openCmd->add_option("--fens", oeFens, "file with one opening FEN per line")->required();
    openCmd->add_option("--out", oeOut)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
    }

    if (perftCmd->parsed()) {
        VariantId id = variantOrThrow(perftVariant);
        Position p = perftFen.empty() ? initialPosition(id) : parseFen(perftFen, id);
        std::cout << perft(p, perftDepth) << "\n";
        return 0;
    }

    if (selfplayCmd->parsed()) {
        std::vector<std::string> openings;
        if (!sp.openings.empty()) openings = readLines(sp.openings);
        std::vector<GameRecord> games = runSelfplay(sp, openings);
        fs::path out = resolveOut(sp.out);
        writeGameRecordsFile(out.string(), games);
        writeManifest(out, "selfplay", selfplayConfigJson(sp));
        OutcomeCounts c = countOutcomes(games);
        std::cerr << "wrote " << games.size() << " games to " << out.string() << " (+"
                  << c.nWin << " =" << c.nDraw << " -" << c.nLose << ")\n";
        return 0;
    }

    if (replayCmd->parsed()) {
        std::vector<GameRecord> games = readGameRecordsFile(replayIn);
        for (std::size_t i = 0; i < games.size(); ++i) {
            try {
                replayRecord(games[i]);
            } catch (const Error& e) {
                std::cerr << "game " << i + 1 << ": " << e.what() << "\n";
                return 2;
            }
        }
        std::cout << games.size() << " games ok\n";
        return 0;
    }

    if (outcomesCmd->parsed()) {
        OutcomeCounts a = countOutcomes(readGameRecordsFile(outcomesA));
        OutcomeCounts b = countOutcomes(readGameRecordsFile(outcomesB));
        double drawLess = drawRateComparison(a, b, outcomesSamples, outcomesSeed);
        double scoreMore = expectedScoreComparison(a, b, outcomesSamples, outcomesSeed + 1);
        fs::path out = resolveOut(outcomesOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"set", "wins", "draws", "losses", "expected_score"});
        csv.row({"a", std::to_string(a.nWin), std::to_string(a.nDraw), std::to_string(a.nLose),
                 fmt(empiricalExpectedScore(a))});
        csv.row({"b", std::to_string(b.nWin), std::to_string(b.nDraw), std::to_string(b.nLose),
                 fmt(empiricalExpectedScore(b))});
        csv.row({"p_draw_a_less", fmt(drawLess), "", "", ""});
        csv.row({"p_score_a_greater", fmt(scoreMore), "", "", ""});
        writeManifest(out, "outcomes",
                      {{"a", outcomesA},
                       {"b", outcomesB},
                       {"samples", outcomesSamples},
                       {"seed", outcomesSeed}});
        std::cout << "P[draw_A < draw_B] = " << drawLess
                  << "  P[e_A > e_B] = " << scoreMore << "\n";
        return 0;
    }

    if (divCmd->parsed()) {
        auto prior = makePrior(divPrior);
        DiversityCurve curve = diversityCurve(*prior, VariantConfig::make(variantOrThrow(divVariant)),
                                              divMaxPly, divSamples, divSeed);
        fs::path out = resolveOut(divOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"ply", "entropy_nats", "entropy_se", "entropy_n", "candidates", "candidates_se",
                 "candidates_n", "sqrt_candidates_ratio"});
        for (int t = 1; t <= divMaxPly; ++t) {
            const DiversityPoint& pt = curve.perPly[t - 1];
            // m(t) vs sqrt(M(t)) diagnostic ratio, reported but never asserted
            double perPlyM = std::exp(pt.entropy / t);
            double ratio = pt.candidates > 0 ? perPlyM / std::sqrt(pt.candidates) : 0.0;
            csv.row({std::to_string(t), fmt(pt.entropy), fmt(pt.entropySe),
                     std::to_string(pt.entropyN), fmt(pt.candidates), fmt(pt.candidatesSe),
                     std::to_string(pt.candidatesN), fmt(ratio)});
        }
        writeManifest(out, "diversity",
                      {{"variant", divVariant},
                       {"prior", divPrior},
                       {"max_ply", divMaxPly},
                       {"samples", divSamples},
                       {"seed", divSeed}});
        return 0;
    }

    if (klCmd->parsed()) {
        auto prior = makePrior(klPrior);
        VariantConfig vp = VariantConfig::make(variantOrThrow(klP));
        VariantConfig vq = VariantConfig::make(variantOrThrow(klQ));
        if (klExact) {
            std::cout << klDivergenceExact(*prior, vp, *prior, vq, klMaxPly) << " nats (exact)\n";
        } else {
            KlEstimate est = klDivergence(*prior, vp, *prior, vq, klMaxPly, klSamples, klSeed);
            std::cout << est.nats << " nats +- " << est.standardError << " (" << est.sampleCount
                      << " sequences)\n";
        }
        return 0;
    }

    if (candCmd->parsed()) {
        auto prior = makePrior(candPrior);
        AdditionalCandidatesCurve curve = additionalCandidates(
            *prior, VariantConfig::make(variantOrThrow(candP)), *prior,
            VariantConfig::make(variantOrThrow(candQ)), candMaxPly, candSamples, candSeed);
        fs::path out = resolveOut(candOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"ply", "additional_candidates", "se", "n"});
        for (int t = 1; t <= candMaxPly; ++t) {
            const AdditionalPoint& pt = curve.perPly[t - 1];
            csv.row({std::to_string(t), fmt(pt.additional), fmt(pt.standardError),
                     std::to_string(pt.sampleCount)});
        }
        csv.row({"bound_states", std::to_string(curve.boundCheck.statesChecked),
                 "violations", std::to_string(curve.boundCheck.violations)});
        csv.row({"bound_min_slack", fmt(curve.boundCheck.minSlack), "", ""});
        writeManifest(out, "candidates",
                      {{"variant_p", candP},
                       {"variant_q", candQ},
                       {"prior", candPrior},
                       {"max_ply", candMaxPly},
                       {"samples", candSamples},
                       {"seed", candSeed}});
        return 0;
    }

    if (pvCmd->parsed()) {
        std::vector<GameRecord> games = readGameRecordsFile(pvIn);
        PositionFilter filter;
        filter.startPly = pvStartPly;
        filter.onePerGame = pvOnePerGame;
        filter.seed = pvSeed;
        PieceValueModel model = fitPieceValues(games, filter);
        fs::path out = resolveOut(pvOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"term", "weight", "normalized"});
        const char* names[] = {"bias", "pawn", "knight", "bishop", "rook", "queen"};
        for (int i = 0; i < 6; ++i)
            csv.row({names[i], fmt(model.weights[i]),
                     i >= 2 ? fmt(model.normalized[i - 2]) : (i == 1 ? fmt(1.0) : "")});
        csv.row({"final_loss", fmt(model.finalLoss), ""});
        csv.row({"iterations", std::to_string(model.iterations), ""});
        csv.row({"samples", std::to_string(model.sampleCount),
                 pvOnePerGame ? "one-per-game" : "all-positions"});
        writeManifest(out, "piece-values",
                      {{"in", pvIn},
                       {"start_ply", pvStartPly},
                       {"one_per_game", pvOnePerGame},
                       {"seed", pvSeed}});
        std::cout << "normalized N/B/R/Q: " << model.normalized[0] << " " << model.normalized[1]
                  << " " << model.normalized[2] << " " << model.normalized[3] << "\n";
        return 0;
    }

    if (utilCmd->parsed()) {
        std::vector<GameRecord> games = readGameRecordsFile(utilIn);
        UtilizationReport rep = specialMoveUtilization(games);
        fs::path out = resolveOut(utilOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"metric", "games_with_move", "game_fraction", "move_count", "move_fraction"});
        auto flagRow = [&](const char* name, const FlagStats& s) {
            csv.row({name, std::to_string(s.gamesWithMove), fmt(s.gameFraction),
                     std::to_string(s.moveCount), fmt(s.moveFraction)});
        };
        flagRow("torpedo", rep.torpedo);
        flagRow("backward", rep.backward);
        flagRow("lateral", rep.lateral);
        flagRow("self_capture", rep.selfCapture);
        flagRow("en_passant", rep.enPassant);
        flagRow("torpedo_promotion", rep.torpedoPromotion);
        csv.row({"games", std::to_string(rep.games), "", std::to_string(rep.plies), ""});
        csv.row({"stalemate_wins", std::to_string(rep.stalemateWins),
                 fmt(rep.stalemateWinShare), std::to_string(rep.decisiveGames), ""});
        writeManifest(out, "utilization", {{"in", utilIn}});
        return 0;
    }

    if (lenCmd->parsed()) {
        std::vector<GameRecord> games = readGameRecordsFile(lenIn);
        GameLengthHistogram hist = gameLengthHistogram(games, lenBucket);
        fs::path out = resolveOut(lenOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"plies_from", "plies_to", "games", "decisive"});
        for (std::size_t i = 0; i < hist.all.size(); ++i)
            csv.row({std::to_string(i * hist.bucketWidth),
                     std::to_string((i + 1) * hist.bucketWidth), std::to_string(hist.all[i]),
                     std::to_string(hist.decisive[i])});
        writeManifest(out, "lengths", {{"in", lenIn}, {"bucket", lenBucket}});
        return 0;
    }

    if (openCmd->parsed()) {
        std::vector<std::string> fens = readLines(oeFens);
        if (fens.empty()) throw Error(Errc::BadStart, "no FENs in '" + oeFens + "'");
        fs::path out = resolveOut(oeOut);
        std::ofstream f(out, std::ios::binary);
        CsvWriter csv(f);
        csv.row({"opening_fen", "games", "white_wins", "draws", "black_wins",
                 "expected_score"});
        for (std::size_t i = 0; i < fens.size(); ++i) {
            SelfplayArgs one = oe;
            one.seed = oe.seed + i;  // distinct stream per opening
            std::vector<GameRecord> games = runSelfplay(one, {fens[i]});
            OutcomeCounts c = countOutcomes(games);
            csv.row({fens[i], std::to_string(c.total()), std::to_string(c.nWin),
                     std::to_string(c.nDraw), std::to_string(c.nLose),
                     fmt(empiricalExpectedScore(c))});
        }
        nlohmann::json cfg = selfplayConfigJson(oe);
        cfg["fens"] = oeFens;
        writeManifest(out, "opening-eval", cfg);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return runMain(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

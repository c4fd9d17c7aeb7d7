#include "probsent/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace probsent {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& sentences,
                       int min_count) {
    if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");

    std::unordered_map<std::string, int64_t> counts;
    int64_t total = 0;
    for (const auto& sent : sentences) {
        for (const auto& tok : sent) {
            ++counts[tok];
            ++total;
        }
    }
    if (total == 0) throw std::runtime_error("empty corpus");

    // Literal occurrences of the unk symbol fold into the unk slot.
    int64_t unk_count = 0;
    if (auto it = counts.find(kUnkToken); it != counts.end()) {
        unk_count += it->second;
        counts.erase(it);
    }

    std::vector<std::pair<std::string, int64_t>> kept;
    kept.reserve(counts.size());
    for (auto& [tok, n] : counts) {
        if (n >= min_count) {
            kept.emplace_back(tok, n);
        } else {
            unk_count += n;
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary vocab;
    vocab.id_to_token.reserve(kept.size() + 1);
    vocab.id_to_token.push_back(kUnkToken);
    vocab.frequency.push_back(unk_count);
    vocab.token_to_id.emplace(kUnkToken, Vocabulary::kUnkId);
    for (auto& [tok, n] : kept) {
        vocab.token_to_id.emplace(tok, vocab.size());
        vocab.id_to_token.push_back(tok);
        vocab.frequency.push_back(n);
    }
    return vocab;
}

Vocabulary vocab_from_tokens(const std::vector<std::string>& tokens) {
    Vocabulary vocab;
    if (tokens.empty() || tokens.front() != kUnkToken) {
        vocab.id_to_token.push_back(kUnkToken);
        vocab.frequency.push_back(0);
        vocab.token_to_id.emplace(kUnkToken, Vocabulary::kUnkId);
    }
    for (const auto& tok : tokens) {
        if (vocab.token_to_id.count(tok))
            throw std::runtime_error("duplicate token in vocabulary: " + tok);
        vocab.token_to_id.emplace(tok, vocab.size());
        vocab.id_to_token.push_back(tok);
        vocab.frequency.push_back(0);
    }
    return vocab;
}

}  // namespace probsent

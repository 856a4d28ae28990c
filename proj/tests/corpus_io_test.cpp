// Copyright 2026 The hsdkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsd/hsd.hpp"
#include "test_support.hpp"

namespace hsd {
namespace {

using testing::TempDir;
using testing::read_file;
using testing::write_file;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<LabeledRecord> read_all(DatasetReader& reader) {
  std::vector<LabeledRecord> out;
  while (auto r = reader.next()) out.push_back(std::move(*r));
  return out;
}

TEST(CsvReaderTest, QuotingRules) {
  std::istringstream in("a,b\r\n\"x, \"\"y\"\"\",\"line1\nline2\"\r\n,\n");
  CsvReader csv(in);
  std::vector<std::string> f;
  ASSERT_EQ(csv.read_row(f), CsvReader::Result::kRow);
  EXPECT_EQ(f, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(csv.read_row(f), CsvReader::Result::kRow);
  EXPECT_EQ(f, (std::vector<std::string>{"x, \"y\"", "line1\nline2"}));
  ASSERT_EQ(csv.read_row(f), CsvReader::Result::kRow);
  EXPECT_EQ(f, (std::vector<std::string>{"", ""}));
  EXPECT_EQ(csv.read_row(f), CsvReader::Result::kEof);
}

TEST(CsvReaderTest, UnterminatedQuoteIsMalformed) {
  std::istringstream in("\"abc\n");
  CsvReader csv(in);
  std::vector<std::string> f;
  EXPECT_EQ(csv.read_row(f), CsvReader::Result::kMalformed);
}

TEST(ReadDatasetTest, ViHsdSplitCountsMatchLineCounts) {
  TempDir dir;
  const auto path = dir / "vihsd.csv";
  const std::uint64_t expected[] = {24048, 2672, 6680};
  const char* names[] = {"train", "dev", "test"};
  std::string csv = "\xEF\xBB\xBF" "free_text,label_id,split\n";
  std::uint64_t line_counts[3] = {0, 0, 0};
  std::mt19937_64 rng(8);
  std::uint64_t row = 0;
  for (int s = 0; s < 3; ++s) {
    for (std::uint64_t i = 0; i < expected[s]; ++i, ++row) {
      csv += csv_quote("bình luận số " + std::to_string(row) + ", \"trích\"") + "," +
             std::to_string(rng() % 3) + "," + names[s] + "\n";
      ++line_counts[s];
    }
  }
  write_file(path, csv);

  DatasetReader reader(path, DatasetSchema::for_name(DatasetName::kViHsd));
  const auto records = read_all(reader);
  EXPECT_EQ(records.size(), 33400u);
  EXPECT_EQ(reader.stats().split_count(Split::kTrain), 24048u);
  EXPECT_EQ(reader.stats().split_count(Split::kDev), 2672u);
  EXPECT_EQ(reader.stats().split_count(Split::kTest), 6680u);
  for (int s = 0; s < 3; ++s) {
    EXPECT_EQ(reader.stats().split_count(static_cast<Split>(s)), line_counts[s]);
  }
  EXPECT_EQ(reader.stats().skipped, 0u);
  EXPECT_EQ(records[0].text.text(), "bình luận số 0, \"trích\"");
  EXPECT_EQ(records[0].label->set(), LabelSet::kViHsd);

  // Binary view of the same file collapses labels while reading.
  DatasetReader binary(path, DatasetSchema::for_name(DatasetName::kViHsdBinary));
  auto first = binary.next();
  ASSERT_TRUE(first);
  EXPECT_EQ(*first->label, collapse_to_binary(*records[0].label));
}

TEST(ReadDatasetTest, ViHosFlatSpans) {
  TempDir dir;
  const auto path = dir / "vihos.csv";
  write_file(path,
             "content,index_spans\n"
             "Chương trình ln gì vậy ? :D,\"[13,14]\"\n"
             "Hãnh diện về ng thầy có tâm nhất của năm.,[]\n"
             "t deo hieu no cuoi cl me gi nua,\"[[2,4],[19,23]]\"\n");
  DatasetReader reader(path, DatasetSchema::for_name(DatasetName::kViHos));
  const auto records = read_all(reader);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].spans->spans(), (std::vector<Span>{{13, 14}}));
  EXPECT_TRUE(records[1].spans->empty());
  EXPECT_EQ(records[2].spans->spans(), (std::vector<Span>{{2, 4}, {19, 23}}));
}

TEST(ReadDatasetTest, EmptyFiles) {
  TempDir dir;
  for (const char* name : {"e.csv", "e.jsonl"}) {
    write_file(dir / name, "");
    DatasetReader reader(dir / name, DatasetSchema::for_name(DatasetName::kPretrain));
    EXPECT_FALSE(reader.next().has_value());
    EXPECT_EQ(reader.stats().records, 0u);
    EXPECT_EQ(reader.stats().rows, 0u);
  }
}

TEST(ReadDatasetTest, MissingColumnIsSchemaMismatch) {
  TempDir dir;
  write_file(dir / "x.csv", "text,label\nhello,0\n");
  try {
    DatasetReader reader(dir / "x.csv", DatasetSchema::for_name(DatasetName::kViHsd));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaMismatch);
  }
  DatasetSchema s = DatasetSchema::for_name(DatasetName::kViHsd);
  s.csv_columns.set("text", "text");
  s.csv_columns.set("label", "label");
  DatasetReader ok(dir / "x.csv", s);
  EXPECT_EQ(ok.next()->label, labels::kClean);
}

TEST(ReadDatasetTest, MissingFileIsIo) {
  try {
    DatasetReader r("/nonexistent/x.jsonl", DatasetSchema::for_name(DatasetName::kPretrain));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(ReadDatasetTest, MalformedRowsSkippedOrFatal) {
  TempDir dir;
  const auto path = dir / "m.jsonl";
  write_file(path,
             "{\"id\":\"1\",\"text\":\"a\",\"label\":\"HATE\"}\n"
             "not json\n"
             "{\"id\":\"2\",\"text\":\"b\",\"label\":\"BOGUS\"}\n"
             "{\"id\":\"3\",\"text\":\"c\",\"spans\":[[0,5]]}\n"
             "\n"
             "{\"id\":\"4\",\"text\":\"d\",\"score\":1.5}\n"
             "{\"id\":\"5\",\"text\":\"e\",\"label\":0,\"split\":\"val\"}\n");
  DatasetReader tolerant(path, DatasetSchema::for_name(DatasetName::kPretrain));
  const auto records = read_all(tolerant);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "1");
  EXPECT_EQ(records[1].split, Split::kDev);
  EXPECT_EQ(tolerant.stats().skipped, 4u);
  EXPECT_EQ(tolerant.stats().rows, 6u);

  DatasetReader strict(path, DatasetSchema::for_name(DatasetName::kPretrain),
                       ReadOptions{.strict = true});
  EXPECT_TRUE(strict.next().has_value());
  try {
    strict.next();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
  }
}

TEST(ReadDatasetTest, RewindReplaysStream) {
  TempDir dir;
  write_file(dir / "r.jsonl", "{\"text\":\"a\"}\n{\"text\":\"b\"}\n");
  DatasetReader reader(dir / "r.jsonl", DatasetSchema::for_name(DatasetName::kPretrain));
  const auto a = read_all(reader);
  reader.rewind();
  const auto b = read_all(reader);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[1].id, "2");  // row number stands in for a missing id
}

LabeledRecord random_record(std::mt19937_64& rng, int i) {
  std::bernoulli_distribution coin(0.5);
  LabeledRecord r;
  r.id = "r" + std::to_string(i);
  r.text = CleanText(testing::random_text(rng, 30));
  switch (rng() % 4) {
    case 0: break;
    case 1: r.label = ClassLabel(LabelSet::kBinary, static_cast<int>(rng() % 2)); break;
    case 2: r.spans = testing::random_spans(rng, r.text.char_len()); break;
    case 3:
      r.label = ClassLabel(LabelSet::kBinary, static_cast<int>(rng() % 2));
      r.spans = testing::random_spans(rng, r.text.char_len());
      break;
  }
  if (coin(rng)) r.score = std::uniform_real_distribution<double>(0, 1)(rng);
  if (coin(rng)) r.topic = coin(rng) ? "Xe cộ" : "News";
  r.split = static_cast<Split>(rng() % 4);
  if (coin(rng)) r.annotator = "builtin:char-nb-1-3";
  return r;
}

TEST(WriteJsonlTest, RoundTripOfRandomRecords) {
  TempDir dir;
  std::mt19937_64 rng(100);
  std::vector<LabeledRecord> records;
  for (int i = 0; i < 100; ++i) records.push_back(random_record(rng, i));
  VectorSource src(records);
  EXPECT_EQ(write_jsonl(src, dir / "out.jsonl"), 100u);
  DatasetReader reader(dir / "out.jsonl", DatasetSchema::for_name(DatasetName::kPretrain),
                       ReadOptions{.strict = true});
  const auto back = read_all(reader);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], records[i]) << i;
}

TEST(WriteJsonlTest, EmojiBytesPreserved) {
  TempDir dir;
  LabeledRecord r;
  r.id = "e";
  r.text = CleanText("ngu quá 😂");
  VectorSource src(std::vector<LabeledRecord>{r});
  write_jsonl(src, dir / "e.jsonl");
  const std::string raw = read_file(dir / "e.jsonl");
  EXPECT_NE(raw.find("ngu quá 😂"), std::string::npos);
  DatasetReader reader(dir / "e.jsonl", DatasetSchema::for_name(DatasetName::kPretrain));
  EXPECT_EQ(reader.next()->text.text(), "ngu quá 😂");
}

TEST(WriteJsonlTest, FieldOrderAndEmptyStream) {
  LabeledRecord r;
  r.id = "1";
  r.text = CleanText("ab");
  r.label = labels::kBinaryHate;
  r.spans = SpanSet::from_pairs({{0, 1}});
  r.score = 0.5;
  r.topic = "t";
  r.split = Split::kTrain;
  EXPECT_EQ(to_jsonl_line(r),
            "{\"id\":\"1\",\"text\":\"ab\",\"label\":\"HATE\",\"spans\":[[0,1]],"
            "\"score\":0.5,\"topic\":\"t\",\"split\":\"train\"}");
  TempDir dir;
  VectorSource empty(std::vector<LabeledRecord>{});
  EXPECT_EQ(write_jsonl(empty, dir / "z.jsonl"), 0u);
  EXPECT_EQ(read_file(dir / "z.jsonl"), "");
}

TEST(T5PairsTest, TaskExamples) {
  LabeledRecord hate;
  hate.id = "1";
  hate.text = CleanText("Im mẹ đi thằng mặt lon");
  hate.label = labels::kHate;
  const T5Pair p = make_t5_pair(hate, Task::kHateSpeech);
  EXPECT_EQ(p.source, "hate-speech-detection: Im mẹ đi thằng mặt lon");
  EXPECT_EQ(p.target, "HATE");

  LabeledRecord clean_span;
  clean_span.text = CleanText("Hãnh diện về ng thầy có tâm nhất của năm.");
  clean_span.spans = SpanSet();
  EXPECT_EQ(make_t5_pair(clean_span, Task::kHateSpans).target, clean_span.text.text());

  LabeledRecord toxic;
  toxic.text = CleanText("nghe xong máu điên trong người nổi lên.");
  toxic.label = labels::kToxic;
  EXPECT_EQ(make_t5_pair(toxic, Task::kToxicSpeech).target, "TOXIC");

  try {
    make_t5_pair(toxic, Task::kHateSpeech);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelTaskMismatch);
  }
}

TEST(T5PairsTest, TsvAndJsonlWriters) {
  LabeledRecord r;
  r.text = CleanText("a\tb");
  r.label = labels::kClean;
  std::ostringstream tsv, jsonl;
  PairWriter tw(tsv, PairFormat::kTsv), jw(jsonl, PairFormat::kJsonl);
  VectorSource s1(std::vector<LabeledRecord>{r}), s2(std::vector<LabeledRecord>{r});
  EXPECT_EQ(make_t5_pairs(s1, Task::kHateSpeech, tw), 1u);
  make_t5_pairs(s2, Task::kHateSpeech, jw);
  EXPECT_EQ(tsv.str(), "hate-speech-detection: a b\tCLEAN\n");
  EXPECT_EQ(jsonl.str(),
            "{\"source\":\"hate-speech-detection: a\\tb\",\"target\":\"CLEAN\"}\n");
}

}  // namespace
}  // namespace hsd

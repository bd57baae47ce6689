"""Опубликованные образующие троичных циклических кодов и справочные константы.

Образующие - представители орбит циклического сдвига. Все значения
переписаны дословно, здесь ничего не вычисляется.
"""

CYCLIC_GENERATORS = {
    4: "0000 0112 1222 1111",
    5: "00000 10012 20110 12210 11202 11111 22122",
    6: "000000 100021 122000 010101 120102 101101 201102 101202 102012 222102 "
       "202020 112011 220220",
    7: "0000000 0000121 1100022 0022020 1110100 1020100 1002001 0021021 2001011 "
       "1200211 2021200 0201220 1022200 1221010 1012020 1021201 1022121 2221020 "
       "0112122 1111121 1112221 1122112 2121211 2221212 2222222",
    8: "00000201 00010112 00011010 00021200 00101210 00110011 00121111 00222110 "
       "01011102 01212210 02021002 02112201 02211101 02211210 02211222 10001122 "
       "10010210 10122021 10122111 10202002 11021220 11100200 11111111 11111210 "
       "11120002 11222011 12001200 12100120 12102200 12111211 12112022 12121212 "
       "20010200 20102201 20121212 20210101 20222011 20222200 21100210 21120111 "
       "21120120 21200221 21212110 22000012 22000100 22020201 22022000 22101102 "
       "22101222 22102210 22120110 22221221 22222222",
}

# (часть с префиксом 0, часть с префиксом 1)
EXTENDED_GENERATORS = {
    3: ("000 111 222", "210"),
    4: ("0000 0221 1211 2222", "1010 2020 1220"),
    5: ("00000 10021 12102 20111 22201 11111 22222", "02210 01020 01212"),
    6: ("100021 122000 100100 200200 010101 222010 110201 101202 202020 111111 "
        "221211 212211 222222",
        "022100 112000 001002 120102 101101 012111 102012 220220 122202 211112 "
        "211222 121212"),
    7: ("1100002 0200100 1200010 0202200 0112200 1002120 1001011 1210020 1222100 "
        "0022202 1221200 0101121 0210201 1102220 1020111 1012211 2021210 0122221 "
        "1112021 1202221 1111111 1122112 2222222",
        "0221000 0102000 0001101 2000120 2101100 1100120 1002202 1200220 1200211 "
        "0012112 1021210 2201022 1110220 0111211 1212210 0202122 0211212 2202212 "
        "1221221"),
}

# Отношение скоростей s для чётных длин n = 6, 8, ..., 88
PUBLISHED_RATE_RATIOS = dict(zip(range(6, 90, 2), (
    1.107, 1.250, 1.000, 0.940, 0.936, 1.026, 1.020,
    1.017, 1.014, 1.013, 1.012, 0.967, 0.946, 0.987,
    0.988, 0.988, 0.989, 0.990, 0.990, 0.991, 0.991,
    0.992, 0.992, 0.992, 0.993, 0.993, 0.993, 0.994,
    0.994, 1.012, 1.011, 1.011, 1.010, 1.010, 1.010,
    1.010, 1.009, 1.009, 0.987, 0.988, 0.988, 0.988,
)))

SIZE_TABLE_LENGTHS = tuple(range(6, 17))

PUBLISHED_CR_SIZES = dict(zip(SIZE_TABLE_LENGTHS, (10, 16, 32, 52, 94, 172, 316, 586, 1096, 2048, 3856)))

# для нечётных n - расширенные циклические коды
PUBLISHED_CYCLIC_SIZES = dict(zip(SIZE_TABLE_LENGTHS, (12, 16, 29, 53, 98, 154, 336, 612, 1200, 2144, 3952)))

# лучшие коды троичной конструкции, включая случайный поиск
PUBLISHED_TERNARY_SIZES = dict(zip(SIZE_TABLE_LENGTHS, (12, 16, 32, 55, 105, 180, 351, 612, 1200, 2144, 3952)))

PARTITION_SIZES = {
    6: None, 7: None, 8: None, 9: None,
    10: "104 (a)", 11: "180 (b)", 12: "336 (b)", 13: "652 (b)",
    14: "1228 (b)", 15: "2288 (b)", 16: "4280 (b)",
}

PARTITION_SOURCE = {
    "a": "разбиение кодов постоянного веса длины 6 и асимметричных кодов длины 4",
    "b": "опубликованные коды метода разбиения",
}

KNOWN_BOUNDS = {
    6: "12", 7: "18", 8: "36", 9: "62", 10: "112-117", 11: "198-210",
    12: "379-410", 13: "699-786", 14: "1273-1500", 15: "2288-2828", 16: "4280-5486",
}

KNOWN_BOUNDS_SOURCE = "опубликованные нижние и верхние границы размера двоичных 1-кодов"

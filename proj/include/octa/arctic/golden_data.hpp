#pragma once

#include <string_view>

namespace octa::golden {

/// m = 3 at lambda = (1/2, 1/4, 3/4), mu = (1/2, 1/5, 4/5).
inline constexpr std::string_view kAppendixM3 = R"(
603358073569688095393738000 u^{14}+1822971422522481873814304800 vu^{13}+302414835014281399576977600 u^{13}
+7658013562515635323215886000 v^2u^{12}+626386479045976264625165760 v u^{12}+65648625922043130480407960u^{12}
+8502660801885990861442260800 v^3 u^{11}-4016291377989674598197523840 v^2u^{11}-8955889812423159779663425824 v u^{11}
-648516348371464166524636080u^{11}+24870815123962290558144794000 v^4 u^{10}-961218355287663519951292800 v^3u^{10}
-6515407606857043381218037200 v^2 u^{10}-172367781226698452854372560 vu^{10}+1099108080544208467044202281 u^{10}
+8664424609796383599417068000 v^5u^9-17028590399764390279389912000 v^4 u^9-11010604932056552215403730080 v^3u^9
+8631816024097405173283346160 v^2 u^9+6130342332781365103023636918 vu^9+300038159586641951467587240 u^9
+48101067368389417583947124400 v^6u^8-8874912221343735420641284800 v^5 u^8-30642500612723566034952420120 v^4u^8
+4089814979226593490453920400 v^3 u^8+2890833100949061663021542421 v^2u^8-1537862122247709326673670200 v u^8
-1276791684735224437145235252u^8+165638160476224209249648000 v^7 u^7-15185547478970793846022129920 v^6u^7
+10619324480232243252222805440 v^5 u^7+17121927414923400963351428640 v^4u^7-4642084019946561205079466936 v^3 u^7
-4201308893745605384096673600 v^2u^7+97128658780698750571038384 v u^7+16658271644450437458125640u^7
+48101067368389417583947124400 v^8 u^6-15185547478970793846022129920 v^7u^6-54696534109775129942931200352 v^6 u^6
+8498087480515562992290313440 v^5u^6+20848735934263779279940738242 v^4 u^6-2928090072842649426783830400 v^3u^6
-1125942030946106640101862864 v^2 u^6+881693827811784667334364120 vu^6+410818358444129895320450118 u^6
+8664424609796383599417068000 v^9u^5-8874912221343735420641284800 v^8 u^5+10619324480232243252222805440 v^7u^5
+8498087480515562992290313440 v^6 u^5-16598910777434586615901305852 v^5u^5-3118943690894703413913413040 v^4 u^5
+4436727620735139576883870032 v^3u^5+378779090210933672213353800 v^2 u^5-894275420028329313474734772 vu^5
-28143830188642461399955080 u^5+24870815123962290558144794000 v^{10}u^4-17028590399764390279389912000 v^9 u^4
-30642500612723566034952420120 v^8u^4+17121927414923400963351428640 v^7 u^4+20848735934263779279940738242 v^6u^4
-3118943690894703413913413040 v^5 u^4-6585025120215513060415620600 v^4u^4+224576822600011254994156440 v^3 u^4
+730062356407169871489508026 v^2u^4-87999348446432687845418760 v u^4-39991576579826072416315884u^4
+8502660801885990861442260800 v^{11} u^3-961218355287663519951292800 v^{10}u^3-11010604932056552215403730080 v^9 u^3
+4089814979226593490453920400 v^8u^3-4642084019946561205079466936 v^7 u^3-2928090072842649426783830400 v^6u^3
+4436727620735139576883870032 v^5 u^3+224576822600011254994156440 v^4u^3-771752886154129578670446744 v^3 u^3
+54105975565681638845373840 v^2u^3+158742939499283087522192736 v u^3+3181828983737934822021000u^3
+7658013562515635323215886000 v^{12} u^2-4016291377989674598197523840 v^{11}u^2-6515407606857043381218037200 v^{10} u^2
+8631816024097405173283346160 v^9u^2+2890833100949061663021542421 v^8 u^2-4201308893745605384096673600 v^7u^2
-1125942030946106640101862864 v^6 u^2+378779090210933672213353800 v^5u^2+730062356407169871489508026 v^4 u^2
+54105975565681638845373840 v^3u^2-205856416682486477443753704 v^2 u^2-4541013871098771634821000 vu^2
-417838190775940873949175 u^2+1822971422522481873814304800 v^{13}u+626386479045976264625165760 v^{12} u
-8955889812423159779663425824 v^{11}u-172367781226698452854372560 v^{10} u+6130342332781365103023636918 v^9u
-1537862122247709326673670200 v^8 u+97128658780698750571038384 v^7u+881693827811784667334364120 v^6 u
-894275420028329313474734772 v^5u-87999348446432687845418760 v^4 u+158742939499283087522192736 v^3 u
-4541013871098771634821000v^2 u+925709140319743466938350 v u-636257259784396800000 u
+603358073569688095393738000v^{14}+302414835014281399576977600 v^{13}+65648625922043130480407960v^{12}
-648516348371464166524636080 v^{11}+1099108080544208467044202281v^{10}+300038159586641951467587240 v^9
-1276791684735224437145235252v^8+16658271644450437458125640 v^7+410818358444129895320450118 v^6
-28143830188642461399955080v^5-39991576579826072416315884 v^4+3181828983737934822021000 v^3
-417838190775940873949175v^2-636257259784396800000 v+6507176520522240000
)";

/// m = 4 at lambda = (1/2, 1/2, 9/10, 1/10), mu = (1/2, 1/2, 1/2, 1/2).
inline constexpr std::string_view kAppendixM4 = R"(
1865357057070562500 u^{20}+8040214205493930000 v u^{19}+24057908820831125400 v^2 u^{18}-4441125622088345250 u^{18}
+39313216117293630480 v^3u^{17}-29939012844366018600 v u^{17}+73651180421168030644 v^4 u^{16}-12929933668024326890 v^2 u^{16}
+10118310470530522825 u^{16}+72428652840795390912 v^5   u^{15}-123453887076899013696 v^3 u^{15}+7155651657787473900 v u^{15}
+120374020497531686304 v^6 u^{14}-65490141412881018800 v^4 u^{14}+28101666374921987920 v^2u^{14}-7424978692843390100 u^{14}
+54528844935004785600 v^7 u^{13}-119634727591822485216 v^5 u^{13}+82981649042010236868 v^3 u^{13}+16659576911242363500 vu^{13}
+232890902059778826120 v^8 u^{12}-200076579710447004960 v^6 u^{12}+70320961099229135980 v^4 u^{12}-55379407385229146900 v^2 u^{12}
+1294150941317351875u^{12}+963632570756269152 v^9 u^{11}+53942752458379867200 v^7 u^{11}-52476298064771112660 v^5 u^{11}
+13172800480291575480 v^3 u^{11}-8797446414920899800 vu^{11}+343772140948551525776 v^{10} u^{10}-557579149718173524388 v^8 u^{10}
+298100820891210187760 v^6 u^{10}-64636470915389906508 v^4u^{10}+38201320674387580830 v^2 u^{10}+354087698981500350 u^{10}
+963632570756269152 v^{11} u^9+135203610372643741200 v^9 u^9-222149669702554081500 v^7u^9+118161884723925156948 v^5 u^9
-48376121742836702328 v^3 u^9+222939375275280000 v u^9+232890902059778826120 v^{12} u^8-557579149718173524388 v^{10}u^8
+605093816463271297814 v^8 u^8-235160946416126975500 v^6 u^8+55243479544063681389 v^4 u^8-8633087504875621410 v^2 u^8
-67353790853352825u^8+54528844935004785600 v^{13} u^7+53942752458379867200 v^{11} u^7-222149669702554081500 v^9 u^7
+119117082588260646160 v^7 u^7-71814538701551870384 v^5u^7+20230021731703841536 v^3 u^7+281342047822398300 v u^7
+120374020497531686304 v^{14} u^6-200076579710447004960 v^{12} u^6+298100820891210187760 v^{10}u^6-235160946416126975500 v^8 u^6
+124954126399081716836 v^6 u^6-23662723202246442204 v^4 u^6+106708566476157900 v^2 u^6-11636145655350000u^6
+72428652840795390912 v^{15} u^5-119634727591822485216 v^{13} u^5-52476298064771112660 v^{11} u^5+118161884723925156948 v^9 u^5
-71814538701551870384 v^7u^5+16371208262322883456 v^5 u^5-1896684382137151100 v^3 u^5+36851525477017500 v u^5
+73651180421168030644 v^{16} u^4-65490141412881018800 v^{14}u^4+70320961099229135980 v^{12} u^4-64636470915389906508 v^{10} u^4
+55243479544063681389 v^8 u^4-23662723202246442204 v^6 u^4+3656070264108895450 v^4u^4-24666825302795000 v^2 u^4
-212561857484375 u^4+39313216117293630480 v^{17} u^3-123453887076899013696 v^{15} u^3+82981649042010236868 v^{13}u^3
+13172800480291575480 v^{11} u^3-48376121742836702328 v^9 u^3+20230021731703841536 v^7 u^3-1896684382137151100 v^5 u^3
-25956260718995000 v^3u^3+328736881500000 v u^3+24057908820831125400 v^{18} u^2-12929933668024326890 v^{16} u^2
+28101666374921987920v^{14} u^2-55379407385229146900 v^{12}u^2+38201320674387580830 v^{10} u^2-8633087504875621410 v^8 u^2
+106708566476157900 v^6 u^2-24666825302795000 v^4 u^2+529284795718750 v^2 u^2+1366328125000u^2+8040214205493930000 v^{19} u
-29939012844366018600 v^{17} u+7155651657787473900 v^{15} u+16659576911242363500 v^{13} u-8797446414920899800 v^{11}u
+222939375275280000 v^9 u+281342047822398300 v^7 u+36851525477017500 v^5 u+328736881500000 v^3 u-15885000000000 v u
+1865357057070562500v^{20}-4441125622088345250 v^{18}+10118310470530522825 v^{16}-7424978692843390100 v^{14}
+1294150941317351875 v^{12}+354087698981500350v^{10}-67353790853352825 v^8-11636145655350000 v^6-212561857484375 v^4
+1366328125000 v^2+97656250000
)";

}  // namespace octa::golden

//! Mittag-Leffler values against a high-precision reference table.

use sadik_core::mittag_leffler::{ml_evaluate, MLSpec};

// (p, q, m, z, E^{(m)}_{p,q}(z))
const TABLE: &[(f64, f64, u32, f64, f64)] = &[
    (0.3, 0.5, 0, -5.0, 0.045519369411852955507),
    (0.3, 0.5, 1, -5.0, 0.0092041624048105598719),
    (0.3, 0.5, 0, -2.5, 0.090218528142151294543),
    (0.3, 0.5, 1, -2.5, 0.034299419973611418336),
    (0.3, 0.5, 0, -0.5, 0.30363310176042706438),
    (0.3, 0.5, 1, -0.5, 0.30720314107854598224),
    (0.3, 0.5, 0, 0.5, 1.5196111396142771917),
    (0.3, 0.5, 1, 0.5, 3.9135697906044992877),
    (0.3, 0.5, 0, 3.0, 1697573723000472671.6),
    (0.3, 0.5, 1, 3.0, 74392845689655416751.0),
    (0.3, 1.0, 0, -5.0, 0.13708086902027063758),
    (0.3, 1.0, 1, -5.0, 0.024250336010516372935),
    (0.3, 1.0, 0, -2.5, 0.24498312379478694282),
    (0.3, 1.0, 1, -2.5, 0.076597846454395626886),
    (0.3, 1.0, 0, -0.5, 0.63264900594359902138),
    (0.3, 1.0, 1, -0.5, 0.47918833382407091205),
    (0.3, 1.0, 0, 0.5, 2.0620157899559994849),
    (0.3, 1.0, 1, 0.5, 3.8982565270731193038),
    (0.3, 1.0, 0, 3.0, 272036108062508801.09),
    (0.3, 1.0, 1, 3.0, 11770318798837590956.0),
    (0.3, 1.7, 0, -5.0, 0.18940824316391431401),
    (0.3, 1.7, 1, -5.0, 0.031737954299684805919),
    (0.3, 1.7, 0, -2.5, 0.32548058842852184447),
    (0.3, 1.7, 1, -2.5, 0.093214716693822199125),
    (0.3, 1.7, 0, -0.5, 0.75216541672501622733),
    (0.3, 1.7, 1, -0.5, 0.48304740541829913985),
    (0.3, 1.7, 0, 0.5, 1.9565797228478282282),
    (0.3, 1.7, 1, 0.5, 2.8785684856739065438),
    (0.3, 1.7, 0, 3.0, 20957700283956452.205),
    (0.3, 1.7, 1, 3.0, 890486593320840986.11),
    (0.5, 0.5, 0, -15.0, 0.0012454877201698007572),
    (0.5, 0.5, 1, -15.0, 0.00016497478341174303121),
    (0.5, 0.5, 0, -7.0, 0.005589203243685752519),
    (0.5, 0.5, 1, -7.0, 0.0015512089175523982235),
    (0.5, 0.5, 0, -5.0, 0.010666394882413155097),
    (0.5, 0.5, 1, -5.0, 0.0040406889089370754),
    (0.5, 0.5, 0, -2.5, 0.03717367339489733533),
    (0.5, 0.5, 1, -2.5, 0.024937997086656903996),
    (0.5, 0.5, 0, -0.5, 0.25634441145129334951),
    (0.5, 0.5, 1, -0.5, 0.35934593274163252536),
    (0.5, 0.5, 0, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 1, 0.5, 3.4927303173215919269),
    (0.5, 0.5, 0, 3.0, 48618.530751582307633),
    (0.5, 0.5, 1, 3.0, 307917.17336349343242),
    (0.5, 0.5, 0, 9.0, 2.710975166253054987e+36),
    (0.5, 0.5, 1, 9.0, 4.9098772455471995876e+37),
    (0.5, 1.0, 0, -15.0, 0.037529606388505765746),
    (0.5, 1.0, 1, -15.0, 0.0024909754403396015143),
    (0.5, 1.0, 0, -7.0, 0.07980005432915293349),
    (0.5, 1.0, 1, -7.0, 0.011178406487371505038),
    (0.5, 1.0, 0, -5.0, 0.11070463773306862637),
    (0.5, 1.0, 1, -5.0, 0.021332789764826310194),
    (0.5, 1.0, 0, -2.5, 0.21080636406114358065),
    (0.5, 1.0, 1, -2.5, 0.074347346789794670661),
    (0.5, 1.0, 0, -0.5, 0.61569034419292587487),
    (0.5, 1.0, 1, -0.5, 0.51268882290258669903),
    (0.5, 1.0, 0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 1, 0.5, 3.0807396562780696672),
    (0.5, 1.0, 0, 3.0, 16205.988853999586625),
    (0.5, 1.0, 1, 3.0, 97237.061503164615265),
    (0.5, 1.0, 0, 9.0, 3.0121946291700610967e+35),
    (0.5, 1.0, 1, 9.0, 5.4219503325061099741e+36),
    (0.5, 1.7, 0, -15.0, 0.069253221639841851806),
    (0.5, 1.7, 1, -15.0, 0.0043980690922601678038),
    (0.5, 1.7, 0, -7.0, 0.14058596399577719605),
    (0.5, 1.7, 1, -7.0, 0.018053057870214167642),
    (0.5, 1.7, 0, -5.0, 0.18905213968830384698),
    (0.5, 1.7, 1, -5.0, 0.032508770799732823471),
    (0.5, 1.7, 0, -2.5, 0.32990263786439642249),
    (0.5, 1.7, 1, -2.5, 0.097174582905499700753),
    (0.5, 1.7, 0, -0.5, 0.76879630372269151857),
    (0.5, 1.7, 1, -0.5, 0.4805494533512533537),
    (0.5, 1.7, 0, 0.5, 1.7880979696558117026),
    (0.5, 1.7, 1, 0.5, 2.0412052322024755463),
    (0.5, 1.7, 0, 3.0, 3480.5989421378910147),
    (0.5, 1.7, 1, 3.0, 19262.005984127691331),
    (0.5, 1.7, 0, 9.0, 1.3897718687780870312e+34),
    (0.5, 1.7, 1, 9.0, 2.4799706902862308578e+35),
    (0.8, 0.5, 0, -40.0, -0.0058389419964399815886),
    (0.8, 0.5, 1, -40.0, -0.00014740610329983203832),
    (0.8, 0.5, 0, -15.0, -0.015784915551780243942),
    (0.8, 0.5, 1, -15.0, -0.0010698898028787278111),
    (0.8, 0.5, 0, -7.0, -0.033868120459553644007),
    (0.8, 0.5, 1, -7.0, -0.0046436166905635425313),
    (0.8, 0.5, 0, -5.0, -0.045884999529087691192),
    (0.8, 0.5, 1, -5.0, -0.0075564384328379986935),
    (0.8, 0.5, 0, -2.5, -0.062311496849653901944),
    (0.8, 0.5, 1, -2.5, 0.0039631182864409650803),
    (0.8, 0.5, 0, -0.5, 0.1902186718008923464),
    (0.8, 0.5, 1, -0.5, 0.47182402952071408171),
    (0.8, 0.5, 0, 0.5, 1.446755278156631235),
    (0.8, 0.5, 1, 0.5, 2.6328131278024777267),
    (0.8, 0.5, 0, 3.0, 128.83083568436230315),
    (0.8, 0.5, 1, 3.0, 238.64076257376744198),
    (0.8, 0.5, 0, 9.0, 29059795.563569401441),
    (0.8, 0.5, 1, 9.0, 64934344.268878488402),
    (0.8, 1.0, 0, -40.0, 0.0056207330638633682699),
    (0.8, 1.0, 1, -40.0, 0.00014505175256820159634),
    (0.8, 1.0, 0, -15.0, 0.015843800747790801341),
    (0.8, 1.0, 1, -15.0, 0.001152891064434744675),
    (0.8, 1.0, 0, -7.0, 0.037861333396684905033),
    (0.8, 1.0, 1, -7.0, 0.0065428474636727869989),
    (0.8, 1.0, 0, -5.0, 0.05759538476215225377),
    (0.8, 1.0, 1, -5.0, 0.014785912156243127893),
    (0.8, 1.0, 0, -2.5, 0.14341738258439233731),
    (0.8, 1.0, 1, -2.5, 0.07412182719230516441),
    (0.8, 1.0, 0, -0.5, 0.60302371586280370036),
    (0.8, 1.0, 1, -0.5, 0.57241437262639296666),
    (0.8, 1.0, 0, 0.5, 1.7632036743667130526),
    (0.8, 1.0, 1, 0.5, 2.1047658475455469599),
    (0.8, 1.0, 0, 3.0, 64.751787985702524737),
    (0.8, 1.0, 1, 3.0, 106.62106322635767651),
    (0.8, 1.0, 0, 9.0, 7360223.2015171227328),
    (0.8, 1.0, 1, 9.0, 15935350.72332966127),
    (0.8, 1.7, 0, -40.0, 0.02332494366545388888),
    (0.8, 1.7, 1, -40.0, 0.00058128529505831792953),
    (0.8, 1.7, 0, -15.0, 0.061839440357569732672),
    (0.8, 1.7, 1, -15.0, 0.0040803162876498730975),
    (0.8, 1.7, 0, -7.0, 0.13064061745019161981),
    (0.8, 1.7, 1, -7.0, 0.018066623417116800795),
    (0.8, 1.7, 0, -5.0, 0.18024786943143298805),
    (0.8, 1.7, 1, -5.0, 0.033974720519337130328),
    (0.8, 1.7, 0, -2.5, 0.33352516010289080085),
    (0.8, 1.7, 1, -2.5, 0.10838390876737334695),
    (0.8, 1.7, 0, -0.5, 0.80187873938458392059),
    (0.8, 1.7, 1, -0.5, 0.46922775156462041554),
    (0.8, 1.7, 0, 0.5, 1.5917022540098094065),
    (0.8, 1.7, 1, 0.5, 1.2642489540365238348),
    (0.8, 1.7, 0, 3.0, 24.462830181116966935),
    (0.8, 1.7, 1, 3.0, 33.646408342486408582),
    (0.8, 1.7, 0, 9.0, 1076288.6186711054105),
    (0.8, 1.7, 1, 9.0, 2225594.2715671798432),
    (1.2, 0.5, 0, -40.0, -0.0059466919462866000137),
    (1.2, 0.5, 1, -40.0, -0.00015054186470691315802),
    (1.2, 0.5, 0, -15.0, -0.01458661341706151344),
    (1.2, 0.5, 1, -15.0, -0.00052973755373612546728),
    (1.2, 0.5, 0, -7.0, -0.065685686143090108327),
    (1.2, 0.5, 1, -7.0, -0.028244820288901356604),
    (1.2, 0.5, 0, -5.0, -0.15313382507387744116),
    (1.2, 0.5, 1, -5.0, -0.060301669521546524729),
    (1.2, 0.5, 0, -2.5, -0.30153220610987512348),
    (1.2, 0.5, 1, -2.5, -0.014526546056348630788),
    (1.2, 0.5, 0, -0.5, 0.13391557051137722954),
    (1.2, 0.5, 1, -0.5, 0.65128822880223766419),
    (1.2, 0.5, 0, 0.5, 1.2713771425640718086),
    (1.2, 0.5, 1, 0.5, 1.772163827210160285),
    (1.2, 0.5, 0, 3.0, 16.073453400585482131),
    (1.2, 0.5, 1, 3.0, 13.321551912549910409),
    (1.2, 0.5, 0, 9.0, 1067.9137067994158451),
    (1.2, 0.5, 1, 9.0, 666.46506024085946719),
    (1.2, 1.0, 0, -40.0, -0.0045485231438240545719),
    (1.2, 1.0, 1, -40.0, -0.00012055866993261369425),
    (1.2, 1.0, 0, -15.0, -0.013455707401708765282),
    (1.2, 1.0, 1, -15.0, -0.0011547980084460398841),
    (1.2, 1.0, 0, -7.0, -0.051483936911223286754),
    (1.2, 1.0, 1, -7.0, -0.01153729984829265348),
    (1.2, 1.0, 0, -5.0, -0.072960176305759224764),
    (1.2, 1.0, 1, -5.0, -0.0060544805948217359545),
    (1.2, 1.0, 0, -2.5, 0.0072148231691742828078),
    (1.2, 1.0, 1, -2.5, 0.11037785261017513399),
    (1.2, 1.0, 0, -0.5, 0.62140396103259633593),
    (1.2, 1.0, 1, -0.5, 0.62278813171274942554),
    (1.2, 1.0, 0, 0.5, 1.5477774224414591339),
    (1.2, 1.0, 1, 0.5, 1.3053864286865897849),
    (1.2, 1.0, 0, 3.0, 10.167754810327472833),
    (1.2, 1.0, 1, 3.0, 7.0230234345258808844),
    (1.2, 1.0, 0, 9.0, 427.50515737253758064),
    (1.2, 1.0, 1, 9.0, 247.00250015595603454),
    (1.2, 1.7, 0, -40.0, 0.014253406887351072174),
    (1.2, 1.7, 1, -40.0, 0.0003600987188014496333),
    (1.2, 1.7, 0, -15.0, 0.038585079797654520026),
    (1.2, 1.7, 1, -15.0, 0.0026076544900927096995),
    (1.2, 1.7, 0, -7.0, 0.089982181384406627896),
    (1.2, 1.7, 1, -7.0, 0.016889571667615426357),
    (1.2, 1.7, 0, -5.0, 0.14346468172432674562),
    (1.2, 1.7, 1, -5.0, 0.04075327024917465407),
    (1.2, 1.7, 0, -2.5, 0.34628871586305256417),
    (1.2, 1.7, 1, -2.5, 0.14432610476776047798),
    (1.2, 1.7, 0, -0.5, 0.86054802607275811482),
    (1.2, 1.7, 1, -0.5, 0.41851959454104090125),
    (1.2, 1.7, 0, 0.5, 1.4143751180326310433),
    (1.2, 1.7, 1, 0.5, 0.71557741835505848347),
    (1.2, 1.7, 0, 3.0, 5.1697546056792419482),
    (1.2, 1.7, 1, 3.0, 2.7172657689568894869),
    (1.2, 1.7, 0, 9.0, 118.59439080176312098),
    (1.2, 1.7, 1, 9.0, 60.87451882656626069),
    (1.5, 0.5, 0, -40.0, 0.0029963966325920715127),
    (1.5, 0.5, 1, -40.0, -0.0019440337615025879634),
    (1.5, 0.5, 0, -15.0, 0.16083856285165106494),
    (1.5, 0.5, 1, -15.0, 0.019321012660714543628),
    (1.5, 0.5, 0, -7.0, -0.18223599784061122284),
    (1.5, 0.5, 1, -7.0, -0.13073057835975528566),
    (1.5, 0.5, 0, -5.0, -0.45863263148464109374),
    (1.5, 0.5, 1, -5.0, -0.13186655260659409516),
    (1.5, 0.5, 0, -2.5, -0.58801970660442070512),
    (1.5, 0.5, 1, -2.5, 0.093922146924662724752),
    (1.5, 0.5, 0, -0.5, 0.13441755684874838367),
    (1.5, 0.5, 1, -0.5, 0.72867254771429057337),
    (1.5, 0.5, 0, 0.5, 1.1448466286155243258),
    (1.5, 0.5, 1, 0.5, 1.3339515205151457077),
    (1.5, 0.5, 0, 3.0, 7.7336409498655097187),
    (1.5, 0.5, 1, 3.0, 4.3996795179693260823),
    (1.5, 0.5, 0, 9.0, 104.98048950383643788),
    (1.5, 0.5, 1, 9.0, 37.529822671422139945),
    (1.5, 1.0, 0, -40.0, -0.009930965478693434638),
    (1.5, 1.0, 1, -40.0, -0.00087882789453159102574),
    (1.5, 1.0, 0, -15.0, 0.015536484967868308042),
    (1.5, 1.0, 1, -15.0, -0.0092611332310732972134),
    (1.5, 1.0, 0, -7.0, -0.24941198049594489347),
    (1.5, 1.0, 1, -7.0, -0.043296144801910658479),
    (1.5, 1.0, 0, -5.0, -0.3000820504131308808),
    (1.5, 1.0, 1, -5.0, 0.0030264723309635862898),
    (1.5, 1.0, 0, -2.5, -0.089558637643441311285),
    (1.5, 1.0, 1, -2.5, 0.20276549348633476827),
    (1.5, 1.0, 0, -0.5, 0.66323679487242795678),
    (1.5, 1.0, 1, -0.5, 0.59924205036404584155),
    (1.5, 1.0, 0, 0.5, 1.4202702357049505227),
    (1.5, 1.0, 1, 0.5, 0.93396530624672829915),
    (1.5, 1.0, 0, 3.0, 5.4046107159010302181),
    (1.5, 1.0, 1, 3.0, 2.4514268464491226784),
    (1.5, 1.0, 0, 9.0, 50.493828456006060939),
    (1.5, 1.0, 1, 9.0, 16.171299694388586136),
    (1.5, 1.7, 0, -40.0, 0.004750464655969263761),
    (1.5, 1.7, 1, -40.0, 0.00015196180476594471514),
    (1.5, 1.7, 0, -15.0, -0.0011220271801909915951),
    (1.5, 1.7, 1, -15.0, -0.004166845597668372848),
    (1.5, 1.7, 0, -7.0, 0.013647144533009817286),
    (1.5, 1.7, 1, -7.0, 0.025915902219886895325),
    (1.5, 1.7, 0, -5.0, 0.10287010997780146529),
    (1.5, 1.7, 1, -5.0, 0.068183233916569147991),
    (1.5, 1.7, 0, -2.5, 0.39461844110911329963),
    (1.5, 1.7, 1, -2.5, 0.17949763665087837457),
    (1.5, 1.7, 0, -0.5, 0.90975875959977465357),
    (1.5, 1.7, 1, -0.5, 0.351995895466691732),
    (1.5, 1.7, 0, 0.5, 1.3237826407121598494),
    (1.5, 1.7, 1, 0.5, 0.48196290792896811537),
    (1.5, 1.7, 0, 3.0, 3.1143984588008400278),
    (1.5, 1.7, 1, 3.0, 1.0071623556982428815),
    (1.5, 1.7, 0, 9.0, 18.073491463377587441),
    (1.5, 1.7, 1, 9.0, 4.865610034832670952),
    (1.9, 0.5, 0, -40.0, 0.13592636394780721888),
    (1.9, 0.5, 1, -40.0, 0.14266490606433608788),
    (1.9, 0.5, 0, -15.0, 0.40949220355651064065),
    (1.9, 0.5, 1, -15.0, -0.21516539351869105992),
    (1.9, 0.5, 0, -7.0, -1.216051461966997902),
    (1.9, 0.5, 1, -7.0, -0.10049679726616373558),
    (1.9, 0.5, 0, -5.0, -1.2825734465874095308),
    (1.9, 0.5, 1, -5.0, 0.045502741828998138564),
    (1.9, 0.5, 0, -2.5, -0.82879389731892641247),
    (1.9, 0.5, 1, -2.5, 0.34148277568129495991),
    (1.9, 0.5, 0, -0.5, 0.18917169215983636676),
    (1.9, 0.5, 1, -0.5, 0.69646408791640558608),
    (1.9, 0.5, 0, 0.5, 0.99569082103877742714),
    (1.9, 0.5, 1, 0.5, 0.92247852293530549856),
    (1.9, 0.5, 0, 3.0, 4.1688575259756281065),
    (1.9, 0.5, 1, 3.0, 1.6606498519359569767),
    (1.9, 0.5, 0, 9.0, 22.504390512204233517),
    (1.9, 0.5, 1, 9.0, 4.8475801014985590584),
    (1.9, 1.0, 0, -40.0, 0.46486102847850336604),
    (1.9, 1.0, 1, -40.0, 0.036763016369442817548),
    (1.9, 1.0, 0, -15.0, -0.40573476328868669933),
    (1.9, 1.0, 1, -15.0, -0.096619443570453517846),
    (1.9, 1.0, 0, -7.0, -0.78831905461805723287),
    (1.9, 1.0, 1, -7.0, 0.048328159466041441874),
    (1.9, 1.0, 0, -5.0, -0.60351609182244002083),
    (1.9, 1.0, 1, -5.0, 0.14172436961489413635),
    (1.9, 1.0, 0, -2.5, -0.053339575137713665242),
    (1.9, 1.0, 1, -2.5, 0.30884335455308732447),
    (1.9, 1.0, 0, -0.5, 0.74009684574409438439),
    (1.9, 1.0, 1, -0.5, 0.49296403438808178386),
    (1.9, 1.0, 0, 0.5, 1.2879406491477730077),
    (1.9, 1.0, 1, 0.5, 0.60514293433127009846),
    (1.9, 1.0, 0, 3.0, 3.2164788191246091587),
    (1.9, 1.0, 1, 3.0, 0.95553076042916810326),
    (1.9, 1.0, 0, 9.0, 12.666361959191252672),
    (1.9, 1.0, 1, 9.0, 2.3453318135065694447),
    (1.9, 1.7, 0, -40.0, 0.12965867655729112799),
    (1.9, 1.7, 1, -40.0, -0.0044591089897217102646),
    (1.9, 1.7, 0, -15.0, -0.28268722914954084115),
    (1.9, 1.7, 1, -15.0, -0.0044770052199339893541),
    (1.9, 1.7, 0, -7.0, -0.040616288628790137898),
    (1.9, 1.7, 1, -7.0, 0.081035239500195533444),
    (1.9, 1.7, 0, -5.0, 0.15950811445683576),
    (1.9, 1.7, 1, -5.0, 0.12066053391290633472),
    (1.9, 1.7, 0, -2.5, 0.53772487583192404607),
    (1.9, 1.7, 1, -2.5, 0.18489436834199792137),
    (1.9, 1.7, 0, -0.5, 0.97072710070036105855),
    (1.9, 1.7, 1, -0.5, 0.25040776210718441714),
    (1.9, 1.7, 0, 0.5, 1.2399217492543151063),
    (1.9, 1.7, 1, 0.5, 0.28863040865105328436),
    (1.9, 1.7, 0, 3.0, 2.0981999176787174858),
    (1.9, 1.7, 1, 3.0, 0.402652675788807213),
    (1.9, 1.7, 0, 9.0, 5.6385321512933407337),
    (1.9, 1.7, 1, 9.0, 0.81468449192163561026),
];

#[test]
fn matches_reference_table() {
    let mut failures = Vec::new();
    for &(p, q, m, z, want) in TABLE {
        let spec = MLSpec::new(p, q, m).unwrap();
        match ml_evaluate(&spec, z) {
            Ok(got) => {
                let tol = 1e-8f64.max(1e-10 * want.abs());
                if (got.value - want).abs() > tol {
                    failures.push(format!(
                        "p={p} q={q} m={m} z={z}: {} vs {want} ({:?})",
                        got.value, got.method
                    ));
                }
            }
            Err(e) => failures.push(format!("p={p} q={q} m={m} z={z}: {e}")),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

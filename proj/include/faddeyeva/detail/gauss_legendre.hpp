// Generated by calibration/gauss_legendre_table.py -- do not edit by hand.
#pragma once

namespace faddeyeva::detail {

inline constexpr int kGaussLegendreOrder = 32;

inline constexpr const char* kGaussLegendreNodes[32] = {
    "-0.9972638618494815635449811286650407271385376637294611593011185457862359083917418520130456693085426416",
    "-0.9856115115452683354001750446309019786323957143358063182107821705820305847193755946663846485510970266",
    "-0.9647622555875064307738119281182749603888952204430187193220113218370995254867038008243801877562227003",
    "-0.9349060759377396891709191348354093255286714322828372184584037398118161947182932855418880831417927728",
    "-0.8963211557660521239653072437192122684789964967957595765636154129650249794910409173494503783167666654",
    "-0.8493676137325699701336930049677425389548867930497592331002195986137246561415625587418814637527549911",
    "-0.7944837959679424069630972989704289020954794016388354532507582449720593922816426654241878967890821228",
    "-0.7321821187402896803874266650912671466302704835066291008211395732703852535877977276112922989886525601",
    "-0.6630442669302152009751151686632383689770222859605053010170834964924461749232229404368981536611965357",
    "-0.5877157572407623290407454764018268584509401154544205727031788473129228586684474311408145102018661765",
    "-0.5068999089322293900237474743778212301802836995994354639743662809707712640478764442266190213124522048",
    "-0.4213512761306353453641194361724264783358772886324433305416613404557190462549837315607633055675740639",
    "-0.3318686022821276497799168057301879961957751368050598360182296306285376829657438169809731852312743263",
    "-0.2392873622521370745446032091655015206088554219602530155470960995597029133039943915553593695844147814",
    "-0.1444719615827964934851863735988106522038459913156355521379528938242184438164519731102406769974924714",
    "-0.04830766568773831623481257044050216369084725173084889716779373454636859260427787777940603659111737810",
    "0.04830766568773831623481257044050216369084725173084889716779373454636859260427787777940603659111737810",
    "0.1444719615827964934851863735988106522038459913156355521379528938242184438164519731102406769974924714",
    "0.2392873622521370745446032091655015206088554219602530155470960995597029133039943915553593695844147814",
    "0.3318686022821276497799168057301879961957751368050598360182296306285376829657438169809731852312743263",
    "0.4213512761306353453641194361724264783358772886324433305416613404557190462549837315607633055675740639",
    "0.5068999089322293900237474743778212301802836995994354639743662809707712640478764442266190213124522048",
    "0.5877157572407623290407454764018268584509401154544205727031788473129228586684474311408145102018661765",
    "0.6630442669302152009751151686632383689770222859605053010170834964924461749232229404368981536611965357",
    "0.7321821187402896803874266650912671466302704835066291008211395732703852535877977276112922989886525601",
    "0.7944837959679424069630972989704289020954794016388354532507582449720593922816426654241878967890821228",
    "0.8493676137325699701336930049677425389548867930497592331002195986137246561415625587418814637527549911",
    "0.8963211557660521239653072437192122684789964967957595765636154129650249794910409173494503783167666654",
    "0.9349060759377396891709191348354093255286714322828372184584037398118161947182932855418880831417927728",
    "0.9647622555875064307738119281182749603888952204430187193220113218370995254867038008243801877562227003",
    "0.9856115115452683354001750446309019786323957143358063182107821705820305847193755946663846485510970266",
    "0.9972638618494815635449811286650407271385376637294611593011185457862359083917418520130456693085426416",
};

inline constexpr const char* kGaussLegendreWeights[32] = {
    "0.007018610009470096600407063738853182513377220728939603232008235619215124145417868695329737690757321508",
    "0.01627439473090567060517056220638661817954296379520956642959317496133696517529178576518444255866928331",
    "0.02539206530926205945575258978922402928755404754694872093625128221921547885323766459604570163389883320",
    "0.03427386291302143310268773225237270699484020291162743378140574541923105221689844462944427246244457607",
    "0.04283589802222668065687864660612552849281085759894073956202194089110439169625722613591380259615969795",
    "0.05099805926237617619616324468952169526018477673976284370690712365250305103851378212674421938683582921",
    "0.05868409347853554714528363730017088675012046745754675871500327861328775180190906437431236534370521169",
    "0.06582222277636184683765006370693877287753644737324651537109166968524124420186273162800444477646090542",
    "0.07234579410884850622539935647848779160433698330182487073976328235117653458168004028744759585916574291",
    "0.07819389578707030647174091882830667103978679848215919030748155386949370011519643540194381976144085129",
    "0.08331192422694675522219907460434861153874688394283445984018640472875940692443809665362556504523150420",
    "0.08765209300440381114277146275180228754844972170175722231922280347470611502113802392630216657715813794",
    "0.09117387869576388471286857711163706254486141327539000532312787397770315206130175135974264171458786227",
    "0.09384439908080456563918023766811726003610007574623645005062756963556951186230980750978042076825302776",
    "0.09563872007927485941908200220413110059489050816200555095298985094370674443660062561336141671908475082",
    "0.09654008851472780056676483006357579473686063123557006873231820995774977586794665129681738710614646446",
    "0.09654008851472780056676483006357579473686063123557006873231820995774977586794665129681738710614646446",
    "0.09563872007927485941908200220413110059489050816200555095298985094370674443660062561336141671908475082",
    "0.09384439908080456563918023766811726003610007574623645005062756963556951186230980750978042076825302776",
    "0.09117387869576388471286857711163706254486141327539000532312787397770315206130175135974264171458786227",
    "0.08765209300440381114277146275180228754844972170175722231922280347470611502113802392630216657715813794",
    "0.08331192422694675522219907460434861153874688394283445984018640472875940692443809665362556504523150420",
    "0.07819389578707030647174091882830667103978679848215919030748155386949370011519643540194381976144085129",
    "0.07234579410884850622539935647848779160433698330182487073976328235117653458168004028744759585916574291",
    "0.06582222277636184683765006370693877287753644737324651537109166968524124420186273162800444477646090542",
    "0.05868409347853554714528363730017088675012046745754675871500327861328775180190906437431236534370521169",
    "0.05099805926237617619616324468952169526018477673976284370690712365250305103851378212674421938683582921",
    "0.04283589802222668065687864660612552849281085759894073956202194089110439169625722613591380259615969795",
    "0.03427386291302143310268773225237270699484020291162743378140574541923105221689844462944427246244457607",
    "0.02539206530926205945575258978922402928755404754694872093625128221921547885323766459604570163389883320",
    "0.01627439473090567060517056220638661817954296379520956642959317496133696517529178576518444255866928331",
    "0.007018610009470096600407063738853182513377220728939603232008235619215124145417868695329737690757321508",
};

}  // namespace faddeyeva::detail

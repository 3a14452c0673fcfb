"""
    evirank.document
    ~~~~~~~~~~~~~~~~

    Read and write evidence documents.

    An evidence document is an XML file holding one frame and any number of
    named Bbas::

        <evidence>
          <frame>
            <grade>Poor</grade>
            <grade>Low</grade>
          </frame>
          <bbas>
            <bba name="m1">
              <focal mass="0.6"><element>Poor</element></focal>
              <focal mass="0.4"><element>1</element><element>2</element></focal>
            </bba>
          </bbas>
        </evidence>

    An ``<element>`` is either a grade label or its 1-based index; labels
    take priority when both could apply.
"""

import logging
from collections import namedtuple

from lxml import etree as ET

from .core import EvidenceError, FocalSet, build_frame, build_bba

__author__ = "evirank contributors"
__copyright__ = "Copyright 2026, evirank contributors"

logger = logging.getLogger(__name__)


class DocumentError(EvidenceError):
    """The document is malformed or describes invalid evidence.

    ``line`` and ``position`` locate the problem when it is known, ``bba``
    names the offending Bba.
    """

    def __init__(self, message, line=None, position=None, bba=None):
        where = []
        if bba is not None:
            where.append("bba '%s'" % bba)
        if line is not None:
            where.append("line %d" % line
                         + (", column %d" % position if position else ""))

        super().__init__("%s (%s)" % (message, "; ".join(where)) if where
                         else message)
        self.line = line
        self.position = position
        self.bba = bba


EvidenceDocument = namedtuple("EvidenceDocument", "frame bbas")
"""A parsed document: a Frame and a dict mapping Bba names to Bbas, in
document order."""


def _parser():
    return ET.XMLParser(resolve_entities=False, no_network=True,
                        remove_comments=True, remove_pis=True)


def _children(elem, tag):
    """Child elements of ``elem``, which must all be named ``tag``."""
    children = list(elem)
    for child in children:
        if child.tag != tag:
            raise DocumentError("Unexpected <%s> inside <%s>, expected <%s>"
                                % (child.tag, elem.tag, tag),
                                line=child.sourceline)
    return children


def _text(elem):
    text = (elem.text or "").strip()
    if not text:
        raise DocumentError("Empty <%s>" % elem.tag, line=elem.sourceline)
    return text


def _top_level(root):
    if root.tag != "evidence":
        raise DocumentError("Root element must be <evidence>, not <%s>"
                            % root.tag, line=root.sourceline)

    found = {}
    for child in root:
        if child.tag not in ("frame", "bbas"):
            raise DocumentError("Unexpected <%s> in <evidence>" % child.tag,
                                line=child.sourceline)
        if child.tag in found:
            raise DocumentError("Duplicate <%s>" % child.tag,
                                line=child.sourceline)
        found[child.tag] = child

    for tag in ("frame", "bbas"):
        if tag not in found:
            raise DocumentError("Missing <%s>" % tag, line=root.sourceline)

    return found["frame"], found["bbas"]


def _parse_bba(frame, elem, renormalize):
    name = elem.get("name")
    if not name:
        raise DocumentError("<bba> without a name", line=elem.sourceline)

    entries = []
    for focal in _children(elem, "focal"):
        raw_mass = focal.get("mass")
        try:
            mass = float(raw_mass)
        except (TypeError, ValueError):
            raise DocumentError("Invalid mass: %r" % raw_mass,
                                line=focal.sourceline, bba=name) from None

        members = [_text(e) for e in _children(focal, "element")]

        try:
            FocalSet.from_members(frame, members)
        except EvidenceError as e:
            raise DocumentError(str(e), line=focal.sourceline,
                                bba=name) from e

        entries.append((members, mass))

    try:
        bba = build_bba(frame, entries, renormalize=renormalize)
    except EvidenceError as e:
        raise DocumentError(str(e), line=elem.sourceline, bba=name) from e

    return name, bba


def parse_document(text, renormalize=False):
    """Parse an evidence document.

    ``text`` is a string or UTF-8 bytes. Returns an
    :data:`EvidenceDocument`. Every problem, including invalid evidence, is
    reported as a :class:`DocumentError`.
    """
    if isinstance(text, str):
        text = text.encode("utf-8")

    try:
        root = ET.fromstring(text, _parser())
    except ET.XMLSyntaxError as e:
        line, column = e.position
        raise DocumentError("Syntax error: %s" % e.msg, line=line,
                            position=column) from e

    frame_elem, bbas_elem = _top_level(root)

    try:
        frame = build_frame(_text(g) for g in _children(frame_elem, "grade"))
    except DocumentError:
        raise
    except EvidenceError as e:
        raise DocumentError(str(e), line=frame_elem.sourceline) from e

    bbas = {}
    for elem in _children(bbas_elem, "bba"):
        name, bba = _parse_bba(frame, elem, renormalize)
        if name in bbas:
            raise DocumentError("Duplicate bba name", line=elem.sourceline,
                                bba=name)
        bbas[name] = bba

    logger.info("Loaded %d bbas on a frame of %d grades", len(bbas),
                frame.size)

    return EvidenceDocument(frame, bbas)


def read_document(filename, renormalize=False):
    with open(filename, "rb") as f:
        return parse_document(f.read(), renormalize=renormalize)


def serialize_document(frame, bbas):
    """Inverse of :func:`parse_document`. Members are written as labels and
    masses with full precision."""
    root = ET.Element("evidence")

    frame_elem = ET.SubElement(root, "frame")
    for label in frame.labels:
        ET.SubElement(frame_elem, "grade").text = str(label)

    bbas_elem = ET.SubElement(root, "bbas")
    for name, bba in bbas.items():
        bba_elem = ET.SubElement(bbas_elem, "bba", name=name)
        for focal, mass in bba.items():
            focal_elem = ET.SubElement(bba_elem, "focal", mass=repr(mass))
            for label in focal.labels:
                ET.SubElement(focal_elem, "element").text = str(label)

    return ET.tostring(root, pretty_print=True, encoding="unicode")
